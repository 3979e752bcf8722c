//! Self-verification suite: one check per acceptance criterion.
//!
//! Every check compares a result against an independently computed
//! expectation. [`Fault::SignFlip`] rewires the black-box so that it
//! negates the phase of input 0, which the suite must notice.

use std::time::{Duration, Instant};

use dequantlab_core::census::{
    brute_force_census, count_separable, count_valid, entangled_example_n3, proposition_witness,
    CensusReport,
};
use dequantlab_core::linalg::Mat2;
use dequantlab_core::optical::{decompose_su2, optical_deutsch, optical_dj2};
use dequantlab_core::oracle::{
    apply_phase_oracle, apply_xor_oracle, classify, negate, BooleanFunction, FunctionKind,
};
use dequantlab_core::qstate::{
    equal_up_to_global_phase, hadamard_all, tensor, Representation, StateVector,
};
use dequantlab_core::separability::{
    entanglement_scan, factor_product_state, pair_product_invariant, Factorization,
    PairProductLevel,
};
use dequantlab_core::solver::{
    apply_product_unitary, distribution_distance, run_dequantised, run_state_vector,
    solve_deutsch_classical, solve_dj2_classical, solve_dj_quantum, ClassicalVectorOracle,
    ComplexBit, ComplexBitOracle, FlowStep, ProductFlow, SolveResult, Verdict,
};
use dequantlab_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census_parallel::parallel_census;

/// Total-variation bound between two simulations of the same flow.
pub const TV_TOLERANCE: f64 = 1e-9;
/// Phase-aligned Frobenius bound on wave-plate reconstructions.
pub const SU2_RESIDUAL_TOLERANCE: f64 = 1e-8;
/// Factorisation round trips must reach fidelity `1 - FIDELITY_GAP`.
pub const FIDELITY_GAP: f64 = 1e-9;
/// Amplitude-wise bound for `H·H = I` and norm preservation on float paths.
pub const ROUNDTRIP_TOLERANCE: f64 = 1e-12;

pub const RANDOM_ORACLES: usize = 100;
pub const RANDOM_SU2_SAMPLES: usize = 100;
pub const RANDOM_PPI_STATES: usize = 1000;
pub const RANDOM_PROPERTY_SAMPLES: usize = 200;

pub const BUDGET_QUANTUM_N1: Duration = Duration::from_millis(1);
pub const BUDGET_CENSUS_SINGLE: Duration = Duration::from_secs(60);
pub const BUDGET_CENSUS_PARALLEL: Duration = Duration::from_secs(15);
pub const BUDGET_WITNESS: Duration = Duration::from_secs(10);
pub const BUDGET_OPTICAL: Duration = Duration::from_secs(30);

pub const CENSUS_THREADS: usize = 4;
pub const DEFAULT_SEED: u64 = 0x5eed_d1ce;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// The black-box negates the phase of input 0.
    SignFlip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest arity for the exhaustive parts, at most 4.
    pub max_n: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            seed: DEFAULT_SEED,
            fault: None,
        }
    }
}

impl VerifyConfig {
    /// The function the black-box actually computes.
    fn black_box(&self, f: &BooleanFunction) -> BooleanFunction {
        match self.fault {
            None => f.clone(),
            Some(Fault::SignFlip) => {
                let mut t = f.table().to_vec();
                t[0] = !t[0];
                BooleanFunction::new(t).expect("same length")
            }
        }
    }

    fn oracle_state(&self, f: &BooleanFunction) -> StateVector {
        self.black_box(f)
            .phase_state()
            .expect("arity within limits")
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Check = fn(&VerifyConfig) -> Result<String, String>;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    check: Check,
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        name: "n=1 quantum",
        check: quantum_n1,
    },
    Criterion {
        id: 2,
        name: "n=1 classical",
        check: classical_n1,
    },
    Criterion {
        id: 3,
        name: "n=2 separable oracles",
        check: classical_n2,
    },
    Criterion {
        id: 4,
        name: "n=3 entangled example",
        check: entangled_n3,
    },
    Criterion {
        id: 5,
        name: "census",
        check: census,
    },
    Criterion {
        id: 6,
        name: "maximal-entanglement witness",
        check: witness,
    },
    Criterion {
        id: 7,
        name: "general de-quantisation",
        check: dequantisation,
    },
    Criterion {
        id: 8,
        name: "optical equivalence",
        check: optical,
    },
    Criterion {
        id: 9,
        name: "cross-oracle separability",
        check: cross_separability,
    },
    Criterion {
        id: 10,
        name: "property suites",
        check: properties,
    },
];

pub fn run_criterion(id: usize, cfg: &VerifyConfig) -> Option<CriterionResult> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let outcome = (c.check)(cfg);
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionResult {
        id: c.id,
        name: c.name,
        passed,
        detail,
        elapsed,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter_map(|c| run_criterion(c.id, cfg))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, elapsed: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < budget, || {
        format!("{what} took {elapsed:?}, budget {budget:?}")
    })
}

fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    (0..1u64 << (1 << n)).map(move |i| BooleanFunction::from_table_index(n, i))
}

fn valid_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    all_functions(n).filter(|f| classify(f).kind.is_valid())
}

fn expected_verdict(f: &BooleanFunction) -> Verdict {
    match classify(f).kind {
        FunctionKind::Constant => Verdict::Constant,
        _ => Verdict::Balanced,
    }
}

fn err<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> String + '_ {
    move |e| format!("{context}: {e}")
}

fn zero_probability(r: &SolveResult) -> f64 {
    r.distribution
        .as_ref()
        .map_or(f64::NAN, |d| d.probability(0))
}

fn quantum_n1(cfg: &VerifyConfig) -> Result<String, String> {
    let start = Instant::now();
    for f in all_functions(1) {
        let bb = cfg.black_box(&f);
        let r = solve_dj_quantum(&bb).map_err(err(&f.to_bit_string()))?;
        let p0 = zero_probability(&r);
        // |2^{-n} Σ (-1)^{f(x)}|² straight from the truth table
        let signed: i64 = f.table().iter().map(|&b| if b { -1 } else { 1 }).sum();
        let expected = (signed * signed) as f64 / 4.0;
        let out = hadamard_all(&cfg.oracle_state(&f));
        ensure(out.representation() != Representation::Complex, || {
            format!("{f}: state left the exact path")
        })?;
        ensure(p0 == expected && (p0 == 0.0 || p0 == 1.0), || {
            format!("{f}: p0 = {p0}, expected exactly {expected}")
        })?;
        ensure(out.probability(0) == expected, || {
            format!("{f}: exact state gives p0 = {}", out.probability(0))
        })?;
        ensure(r.verdict == expected_verdict(&f), || {
            format!("{f}: verdict {}", r.verdict)
        })?;
        ensure(r.oracle_calls == 1, || {
            format!("{f}: {} oracle calls", r.oracle_calls)
        })?;
    }
    within(BUDGET_QUANTUM_N1, start.elapsed(), "n=1 quantum runs")?;
    Ok("4/4 functions: p0 exactly 1 (constant) or 0 (balanced), 1 call each".into())
}

fn classical_n1(cfg: &VerifyConfig) -> Result<String, String> {
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let display = [("00", i), ("11", -i), ("01", one), ("10", -one)];
    let z = ComplexBit::SUPERPOSITION;
    for (table, expected) in display {
        let f = BooleanFunction::new(table.chars().map(|c| c == '1').collect()).unwrap();
        let black_box = ComplexBitOracle::new(cfg.black_box(&f)).map_err(err(table))?;
        let w = z.project(black_box.apply_one(z).map_err(err(table))?);
        ensure(w.0 == expected, || {
            format!("{table}: output {w}, expected {expected}")
        })?;
        let r = solve_deutsch_classical(&cfg.black_box(&f)).map_err(err(table))?;
        ensure(r.identified_function.as_ref() == Some(&f), || {
            format!(
                "{table}: identified {:?}",
                r.identified_function.as_ref().map(|g| g.to_bit_string())
            )
        })?;
        ensure(r.verdict == expected_verdict(&f), || {
            format!("{table}: verdict {}", r.verdict)
        })?;
        ensure(r.oracle_calls == 1, || {
            format!("{table}: {} calls", r.oracle_calls)
        })?;
    }
    Ok("outputs i, -i, 1, -1 for 00, 11, 01, 10; each f identified in 1 call".into())
}

fn classical_n2(cfg: &VerifyConfig) -> Result<String, String> {
    let z = ComplexBit::SUPERPOSITION;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let mut count = 0;
    for f in valid_functions(2) {
        let name = f.to_bit_string();
        let state = cfg.oracle_state(&f);
        ensure(
            factor_product_state(&state)
                .map_err(err(&name))?
                .is_product(),
            || format!("{name}: oracle output entangled"),
        )?;
        let (f00, f10, f11) = (f.eval(0), f.eval(2), f.eval(3));
        let sign = if f00 { -one } else { one };
        let expected = [
            sign * if f00 == f10 { i } else { one },
            if f10 == f11 { i } else { one },
        ];
        let black_box = ComplexBitOracle::new(cfg.black_box(&f)).map_err(err(&name))?;
        let out = black_box.apply_two([z, z]).map_err(err(&name))?;
        let w = [z.project(out[0]).0, z.project(out[1]).0];
        ensure(w == expected, || {
            format!("{name}: outputs {w:?}, expected {expected:?}")
        })?;
        let c = solve_dj2_classical(&cfg.black_box(&f)).map_err(err(&name))?;
        let q = solve_dj_quantum(&cfg.black_box(&f)).map_err(err(&name))?;
        ensure(c.identified_function.as_ref() == Some(&f), || {
            format!("{name}: not identified")
        })?;
        ensure(
            c.verdict == q.verdict && q.verdict == expected_verdict(&f),
            || format!("{name}: classical {} vs quantum {}", c.verdict, q.verdict),
        )?;
        ensure(c.oracle_calls == 1 && q.oracle_calls == 1, || {
            format!("{name}: call count")
        })?;
        count += 1;
    }
    ensure(count == 8, || {
        format!("{count} valid functions, expected 8")
    })?;
    Ok("8/8 valid functions separable; outputs match the case table; f identified".into())
}

fn entangled_n3(cfg: &VerifyConfig) -> Result<String, String> {
    let f = entangled_example_n3();
    ensure(f.to_bit_string() == "00011110", || {
        format!("example is {f}")
    })?;
    let state = cfg.oracle_state(&f);
    let report = pair_product_invariant(&state).map_err(err("ppi"))?;
    ensure(report.exact && !report.invariant, || {
        format!("invariant held: {report:?}")
    })?;
    let level2 = report.levels.iter().find(|l| l.k() == 2);
    ensure(
        level2
            == Some(&PairProductLevel::Violated {
                k: 2,
                first: 0,
                second: 1,
            }),
        || format!("level 2 is {level2:?}"),
    )?;
    let a = |i| state.amplitude(i);
    let (left, right) = (a(0) * a(3), a(1) * a(2));
    ensure(left != right, || "a0*a3 equals a1*a2".into())?;
    ensure(
        matches!(
            factor_product_state(&state),
            Ok(Factorization::Entangled { .. })
        ),
        || "factorisation succeeded".into(),
    )?;
    Ok(format!(
        "PPI fails at k=2: a0*a3 = {} != a1*a2 = {}",
        left.re, right.re
    ))
}

fn census(cfg: &VerifyConfig) -> Result<String, String> {
    const A: [u64; 4] = [4, 8, 16, 32];
    const B: [u64; 4] = [4, 8, 72, 12872];
    const FRACTION: [&str; 4] = ["1", "1", "2/9", "4/1609"];
    let top = cfg.max_n.clamp(1, 4);
    let mut timings = Vec::new();
    for n in 1..=top {
        let start = Instant::now();
        let single = brute_force_census(n).map_err(err("brute force"))?;
        let t_single = start.elapsed();
        let start = Instant::now();
        let parallel = parallel_census(n, CENSUS_THREADS).map_err(err("parallel"))?;
        let t_parallel = start.elapsed();
        let check = |r: &CensusReport, how: &str| {
            ensure(
                r.separable_count == A[n - 1].into()
                    && r.valid_count == B[n - 1].into()
                    && r.separable_count == count_separable(n).unwrap()
                    && r.valid_count == count_valid(n).unwrap()
                    && r.fraction.to_string() == FRACTION[n - 1],
                || {
                    format!(
                        "n={n} {how}: a={} b={} fraction={}",
                        r.separable_count, r.valid_count, r.fraction
                    )
                },
            )
        };
        check(&single, "single-threaded")?;
        check(&parallel, "parallel")?;
        ensure(single == parallel, || {
            format!("n={n}: parallel scan differs")
        })?;
        within(
            BUDGET_CENSUS_SINGLE,
            t_single,
            &format!("n={n} single-threaded scan"),
        )?;
        within(
            BUDGET_CENSUS_PARALLEL,
            t_parallel,
            &format!("n={n} parallel scan"),
        )?;
        timings.push(format!("n={n} {t_single:.2?}/{t_parallel:.2?}"));
    }
    Ok(format!(
        "a_n, b_n and fractions match for n=1..{top}; scans (1 vs {CENSUS_THREADS} threads): {}",
        timings.join(", ")
    ))
}

fn witness(cfg: &VerifyConfig) -> Result<String, String> {
    let start = Instant::now();
    for n in 3..=12 {
        let w = proposition_witness(n).map_err(err("witness"))?;
        ensure(classify(&w).kind == FunctionKind::Balanced, || {
            format!("n={n}: not balanced")
        })?;
        let scan = entanglement_scan(&cfg.oracle_state(&w), 6).map_err(err("scan"))?;
        ensure(scan.no_separable_qubit(), || {
            format!("n={n}: separable qubits {:?}", scan.separable_qubits)
        })?;
        if n <= 6 {
            ensure(scan.no_separable_cut() == Some(true), || {
                format!("n={n}: separable cuts {:?}", scan.separable_cuts)
            })?;
        }
    }
    within(BUDGET_WITNESS, start.elapsed(), "witness checks")?;
    Ok("n=3..12 balanced with no separable qubit; no separable cut for n<=6".into())
}

fn random_flow(n: usize, rng: &mut ChaCha8Rng) -> ProductFlow {
    let mut flow = ProductFlow::deutsch_jozsa(n);
    let q = rng.random_range(0..n);
    flow.steps.insert(
        0,
        FlowStep::Gate {
            qubit: q,
            gate: Mat2::random_unitary(rng),
        },
    );
    if rng.random_bool(0.5) {
        flow.steps.push(FlowStep::Query);
    }
    flow
}

fn dequantisation(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = cfg.rng(7);
    let mut worst: f64 = 0.0;
    for k in 0..RANDOM_ORACLES {
        let n = rng.random_range(1..=6);
        let factors: Vec<Mat2> = (0..n).map(|_| Mat2::random_unitary(&mut rng)).collect();
        let flow = random_flow(n, &mut rng);
        let oracle = ClassicalVectorOracle::new(factors.clone()).map_err(err("oracle"))?;
        let cheap = run_dequantised(&oracle, &flow).map_err(err("de-quantised run"))?;
        let (full, calls) = run_state_vector(&flow, |s| {
            let out = apply_product_unitary(s, &factors)?;
            Ok(match cfg.fault {
                None => out,
                Some(Fault::SignFlip) => flip_first(&out),
            })
        })
        .map_err(err("state-vector run"))?;
        let tv = distribution_distance(&cheap.distribution, &full).map_err(err("distance"))?;
        worst = worst.max(tv);
        ensure(tv < TV_TOLERANCE, || {
            format!("oracle {k} (n={n}): TV {tv:e}")
        })?;
        ensure(cheap.oracle_calls == calls, || {
            format!("oracle {k}: {} vs {calls} calls", cheap.oracle_calls)
        })?;
    }
    Ok(format!(
        "{RANDOM_ORACLES} random product oracles, n<=6: max TV {worst:.1e}, equal call counts"
    ))
}

fn flip_first(s: &StateVector) -> StateVector {
    let mut amps = s.amplitudes();
    amps[0] = -amps[0];
    StateVector::from_amplitudes(amps).expect("still normalised")
}

fn optical(cfg: &VerifyConfig) -> Result<String, String> {
    let start = Instant::now();
    let mut compared = 0;
    for n in 1..=2 {
        for f in valid_functions(n) {
            let name = f.to_bit_string();
            let bb = cfg.black_box(&f);
            let o = if n == 1 {
                optical_deutsch(&bb)
            } else {
                optical_dj2(&bb)
            }
            .map_err(err(&name))?;
            let q = solve_dj_quantum(&f).map_err(err(&name))?;
            ensure(o.verdict == q.verdict, || {
                format!("{name}: optical {} vs quantum {}", o.verdict, q.verdict)
            })?;
            let tv = distribution_distance(
                o.distribution.as_ref().expect("optical runs measure"),
                q.distribution.as_ref().expect("quantum runs measure"),
            )
            .map_err(err(&name))?;
            ensure(tv < TV_TOLERANCE, || format!("{name}: TV {tv:e}"))?;
            ensure(o.oracle_calls == 1, || {
                format!("{name}: {} calls", o.oracle_calls)
            })?;
            compared += 1;
        }
    }
    let mut rng = cfg.rng(8);
    let mut worst: f64 = 0.0;
    for k in 0..RANDOM_SU2_SAMPLES {
        let u = Mat2::random_su2(&mut rng);
        let d = decompose_su2(&u).map_err(err(&format!("sample {k}")))?;
        let residual = u.phase_aligned_distance(&d.matrix()).0;
        worst = worst.max(residual);
        ensure(residual < SU2_RESIDUAL_TOLERANCE, || {
            format!("sample {k}: residual {residual:e}")
        })?;
    }
    within(BUDGET_OPTICAL, start.elapsed(), "optical checks")?;
    Ok(format!(
        "{compared} optical runs agree with quantum; {RANDOM_SU2_SAMPLES} SU(2) decompositions, max residual {worst:.1e}"
    ))
}

fn cross_separability(cfg: &VerifyConfig) -> Result<String, String> {
    let top = cfg.max_n.clamp(2, 4);
    let mut dj = 0;
    for n in 2..=top {
        for f in valid_functions(n) {
            let s = cfg.oracle_state(&f);
            let ppi = pair_product_invariant(&s).map_err(err("ppi"))?.invariant;
            let product = factor_product_state(&s)
                .map_err(err("factor"))?
                .is_product();
            ensure(ppi == product, || {
                format!("{f}: PPI {ppi}, factorisation {product}")
            })?;
            dj += 1;
        }
    }
    let mut rng = cfg.rng(9);
    let mut products = 0;
    for k in 0..RANDOM_PPI_STATES {
        let n = rng.random_range(2..=5);
        let s = if k % 2 == 0 {
            products += 1;
            (0..n)
                .map(|_| StateVector::random(1, &mut rng).expect("one qubit"))
                .reduce(|a, b| tensor(&a, &b).expect("small"))
                .expect("n >= 2")
        } else {
            StateVector::random(n, &mut rng).expect("small")
        };
        let report = pair_product_invariant(&s).map_err(err("ppi"))?;
        ensure(report.decides_separability(), || {
            format!("state {k}: zero amplitude")
        })?;
        let product = factor_product_state(&s)
            .map_err(err("factor"))?
            .is_product();
        ensure(report.invariant == product, || {
            format!(
                "state {k}: PPI {}, factorisation {product}",
                report.invariant
            )
        })?;
        ensure(product == (k % 2 == 0), || {
            format!("state {k}: product={product}")
        })?;
    }
    Ok(format!(
        "{dj} oracle states (n=2..{top}) and {RANDOM_PPI_STATES} random states ({products} products) agree"
    ))
}

fn properties(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = cfg.rng(10);
    let minus = StateVector::from_signs(&[1, -1]).expect("valid");
    for k in 0..RANDOM_PROPERTY_SAMPLES {
        let n = rng.random_range(1..=6);
        let s = StateVector::random(n, &mut rng).expect("small");
        let h = hadamard_all(&s);
        ensure((h.norm_sqr() - 1.0).abs() < ROUNDTRIP_TOLERANCE, || {
            format!("sample {k}: |H psi|^2 = {}", h.norm_sqr())
        })?;
        let back = hadamard_all(&h);
        let gap = s
            .amplitudes()
            .iter()
            .zip(back.amplitudes())
            .map(|(a, b)| (a - b).norm_sqr())
            .fold(0.0, f64::max)
            .sqrt();
        ensure(gap < ROUNDTRIP_TOLERANCE, || {
            format!("sample {k}: HH gap {gap:e}")
        })?;

        let table: Vec<bool> = (0..1usize << n).map(|_| rng.random_bool(0.5)).collect();
        let f = BooleanFunction::new(table).expect("power-of-two length");
        let bb = cfg.black_box(&f);
        let via_xor =
            apply_xor_oracle(&f, &tensor(&s, &minus).expect("small")).map_err(err("xor"))?;
        let via_phase =
            tensor(&apply_phase_oracle(&bb, &s).map_err(err("phase"))?, &minus).expect("small");
        ensure(
            equal_up_to_global_phase(&via_xor, &via_phase, ROUNDTRIP_TOLERANCE)
                .map_err(err("compare"))?,
            || format!("sample {k}: XOR and phase oracles differ for {f}"),
        )?;

        let (p, q) = (cfg.oracle_state(&f), cfg.oracle_state(&negate(&f)));
        ensure(p.negated() == q, || {
            format!("sample {k}: negation is not a global phase for {f}")
        })?;

        let product = (0..n)
            .map(|_| StateVector::random(1, &mut rng).expect("one qubit"))
            .reduce(|a, b| tensor(&a, &b).expect("small"))
            .expect("n >= 1");
        match factor_product_state(&product).map_err(err("factor"))? {
            Factorization::Product(pf) => {
                let fid = pf.fidelity(&product).map_err(err("fidelity"))?;
                ensure(fid > 1.0 - FIDELITY_GAP, || {
                    format!("sample {k}: fidelity {fid}")
                })?;
            }
            Factorization::Entangled { qubit } => {
                return Err(format!("sample {k}: product state entangled at {qubit}"));
            }
        }
    }
    for n in 1..=3 {
        let plus = StateVector::plus(n).expect("small");
        for f in all_functions(n) {
            let via_xor =
                apply_xor_oracle(&f, &tensor(&plus, &minus).expect("small")).map_err(err("xor"))?;
            let via_phase = tensor(
                &apply_phase_oracle(&cfg.black_box(&f), &plus).map_err(err("phase"))?,
                &minus,
            )
            .expect("small");
            ensure(via_xor == via_phase, || {
                format!("{f}: exact XOR and phase oracles differ")
            })?;
        }
    }
    Ok(format!(
        "{RANDOM_PROPERTY_SAMPLES} random samples plus all 276 functions with n<=3: involution, norm, kickback, negation, roundtrip"
    ))
}
