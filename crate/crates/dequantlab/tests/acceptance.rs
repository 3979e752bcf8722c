//! Acceptance suite: one line per criterion, then a negative control.
//!
//! Run with `cargo test -p dequantlab --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::time::Duration;

use dequantlab::verify::{self, run_criterion, Fault, VerifyConfig, CRITERIA};

#[test]
fn tolerances_are_pinned() {
    assert_eq!(verify::TV_TOLERANCE, 1e-9);
    assert_eq!(verify::SU2_RESIDUAL_TOLERANCE, 1e-8);
    assert_eq!(verify::FIDELITY_GAP, 1e-9);
    assert_eq!(verify::ROUNDTRIP_TOLERANCE, 1e-12);
    assert_eq!(dequantlab_core::solver::DECISION_TOLERANCE, 1e-9);
    assert_eq!(dequantlab_core::solver::PURITY_TOLERANCE, 1e-9);
    assert_eq!(dequantlab_core::solver::UNITARY_TOLERANCE, 1e-10);
    assert_eq!(dequantlab_core::optical::SU2_INPUT_TOLERANCE, 1e-10);
    assert_eq!(dequantlab_core::optical::SU2_RESIDUAL_TOLERANCE, 1e-8);
    assert_eq!(dequantlab_core::optical::JONES_NORM_TOLERANCE, 1e-12);
    assert_eq!(dequantlab_core::separability::RANK_TOLERANCE, 1e-10);
    assert_eq!(dequantlab_core::separability::PPI_RELATIVE_TOLERANCE, 1e-9);
    assert_eq!(dequantlab_core::qstate::NORM_TOLERANCE, 1e-10);
    assert_eq!(verify::RANDOM_ORACLES, 100);
    assert_eq!(verify::RANDOM_SU2_SAMPLES, 100);
    assert_eq!(verify::RANDOM_PPI_STATES, 1000);
    assert_eq!(verify::BUDGET_QUANTUM_N1, Duration::from_millis(1));
    assert_eq!(verify::BUDGET_CENSUS_SINGLE, Duration::from_secs(60));
    assert_eq!(verify::BUDGET_CENSUS_PARALLEL, Duration::from_secs(15));
    assert_eq!(verify::BUDGET_WITNESS, Duration::from_secs(10));
    assert_eq!(verify::BUDGET_OPTICAL, Duration::from_secs(30));
    assert_eq!(verify::CENSUS_THREADS, 4);
}

#[test]
fn acceptance_criteria() {
    let cfg = VerifyConfig::default();
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let r = run_criterion(c.id, &cfg).expect("criterion exists");
        println!(
            "[{}] {:>2}. {:<26} {:>10.3?}  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.elapsed,
            r.detail
        );
        if !r.passed {
            failed.push(r.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn negative_control_is_detected() {
    let cfg = VerifyConfig {
        fault: Some(Fault::SignFlip),
        ..Default::default()
    };
    // criteria whose black-box the fault rewires
    for id in [1, 2, 3, 4, 7, 8, 10] {
        let r = run_criterion(id, &cfg).expect("criterion exists");
        println!(
            "[control] {:>2}. {:<26} {}",
            r.id,
            r.name,
            if r.passed { "missed" } else { "caught" }
        );
        assert!(
            !r.passed,
            "criterion {id} did not notice the sign flip: {}",
            r.detail
        );
    }
}
