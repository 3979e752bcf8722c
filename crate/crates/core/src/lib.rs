//! Deutsch-Jozsa simulation, separability analysis and de-quantisation.
//!
//! The crate is `no_std` and only needs `alloc`. Oracle states whose
//! amplitudes are all `±2^{-n/2}` are kept in an exact integer form, so the
//! separability and pair-product verdicts on them never depend on rounding.
//!
//! Module map:
//!
//! * [`qstate`]: state vectors, Walsh-Hadamard transform, tensor products,
//!   measurement distributions.
//! * [`oracle`]: Boolean functions, promise classification, phase and XOR
//!   oracles with query counting.
//! * [`separability`]: pair product invariance, product-state factorisation,
//!   single-qubit and bipartition rank tests.
//! * [`census`]: valid/separable function counts, the recursive separable
//!   family and exhaustive cross-checks.
//! * [`solver`]: quantum, complex-bit and product-oracle solution routes.
//! * [`optical`]: Jones-calculus photon flows and wave-plate decomposition.
#![no_std]
// `!(x < tol)` is used on purpose so NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod census;
pub mod limits;
pub mod linalg;
mod math;
pub mod optical;
pub mod optimize;
pub mod oracle;
pub mod qstate;
pub mod separability;
pub mod solver;

pub use num_complex::Complex64;

pub use census::{
    brute_force_census, count_separable, count_valid, enumerate_separable_functions,
    proposition_witness, CensusMethod, CensusReport, CensusTally,
};
pub use linalg::Mat2;
pub use optical::{decompose_su2, optical_deutsch, optical_dj2, JonesVector, WavePlate};
pub use oracle::{
    apply_phase_oracle, apply_xor_oracle, classify, negate, parse_truth_table, BooleanFunction,
    Classification, FunctionKind, Oracle,
};
pub use qstate::{
    equal_up_to_global_phase, hadamard_all, make_basis_state, measure_distribution, tensor,
    MeasurementDistribution, Representation, StateVector,
};
pub use separability::{
    bipartition_separable, factor_product_state, n2_separability_condition, pair_product_invariant,
    qubit_separable, Factorization, PairProductReport, ProductFactorization,
};
pub use solver::{
    extract_product_oracle, solve_deutsch_classical, solve_dj2_classical, solve_dj_quantum,
    SolveResult, SolverError, Verdict,
};
