//! Solution routes for the Deutsch-Jozsa problem.
//!
//! * [`solve_dj_quantum`]: `H^{⊗n}` → phase oracle → `H^{⊗n}` on the state
//!   vector, any `n`.
//! * [`solve_deutsch_classical`], [`solve_dj2_classical`]: complex numbers
//!   as two-dimensional classical bits, `n = 1` and `n = 2`.
//! * [`extract_product_oracle`] + [`run_dequantised`]: when the oracle never
//!   entangles `|+⟩^{⊗n}`, replace it by one 2×2 unitary per qubit and run
//!   the algorithm on `n` independent two-component vectors.
//!
//! Every route spends exactly one black-box query per oracle step.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{Amp2, Mat2};
use crate::math;
use crate::oracle::{self, classify, BooleanFunction, Oracle, OracleError};
use crate::qstate::{
    hadamard_all, measure_distribution, tensor, MeasurementDistribution, StateError, StateVector,
};
use crate::separability::{factor_product_state, Factorization, SeparabilityError};

/// `p₀` above `1 - DECISION_TOLERANCE` reads as constant, below it as
/// balanced.
pub const DECISION_TOLERANCE: f64 = 1e-9;
/// A complex bit is imaginary when `|Re| < PURITY_TOLERANCE·|Im|`.
pub const PURITY_TOLERANCE: f64 = 1e-9;
/// Largest allowed `‖U†U − I‖_F` for oracle factors and flow gates.
pub const UNITARY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(
        "promise violated: f has {ones} ones out of {len} inputs, neither constant nor balanced"
    )]
    PromiseViolated {
        ones: usize,
        len: usize,
        zero_probability: Option<f64>,
    },
    #[error("expected a function of arity {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("complex-bit output {re} + {im}i is neither real nor imaginary")]
    Ambiguous { re: f64, im: f64 },
    #[error("decoded function {decoded} disagrees with the black-box")]
    DecodeMismatch { decoded: String },
    #[error("matrix {index} is not unitary (defect {defect:e})")]
    NotUnitary { index: usize, defect: f64 },
    #[error("oracle output is entangled at qubit {qubit}; no product de-quantisation exists")]
    Entangled { qubit: usize },
    #[error("flow on {flow} qubits does not match oracle on {oracle} qubits")]
    QubitMismatch { flow: usize, oracle: usize },
    #[error("flow references qubit {qubit} but has only {n}")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Separability(#[from] SeparabilityError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Constant,
    Balanced,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Constant => "constant",
            Verdict::Balanced => "balanced",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub verdict: Verdict,
    /// Set only by routes that recover `f` itself.
    pub identified_function: Option<BooleanFunction>,
    pub oracle_calls: u64,
    /// Final measurement distribution, for routes that have one.
    pub distribution: Option<MeasurementDistribution>,
    pub trace: Vec<String>,
}

fn promise_error(f: &BooleanFunction, zero_probability: Option<f64>) -> SolverError {
    SolverError::PromiseViolated {
        ones: f.ones(),
        len: f.len(),
        zero_probability,
    }
}

fn verdict_from_zero_probability(f: &BooleanFunction, p0: f64) -> Result<Verdict, SolverError> {
    if p0 > 1.0 - DECISION_TOLERANCE {
        Ok(Verdict::Constant)
    } else if p0 < DECISION_TOLERANCE {
        Ok(Verdict::Balanced)
    } else {
        Err(promise_error(f, Some(p0)))
    }
}

/// Quantum algorithm on `n` qubits with the phase oracle.
///
/// The all-zero outcome has probability `|2^{-n} Σ_x (-1)^{f(x)}|²`, which
/// is exactly 1 or 0 under the promise.
pub fn solve_dj_quantum(f: &BooleanFunction) -> Result<SolveResult, SolverError> {
    let n = f.n();
    let oracle = Oracle::new(f.clone());
    let start = StateVector::basis(n, 0)?;
    let spread = hadamard_all(&start);
    let kicked = oracle.apply_phase(&spread)?;
    let out = hadamard_all(&kicked);
    let qubits: Vec<usize> = (0..n).collect();
    let distribution = measure_distribution(&out, &qubits)?;
    let p0 = distribution.probability(0);
    let verdict = verdict_from_zero_probability(f, p0)?;
    if !classify(f).kind.is_valid() {
        return Err(promise_error(f, Some(p0)));
    }
    Ok(SolveResult {
        verdict,
        identified_function: None,
        oracle_calls: oracle.queries(),
        trace: vec![
            format!("prepare |0>^{n}"),
            format!("apply H^{n}"),
            String::from("query phase oracle"),
            format!("apply H^{n}"),
            format!("P(all zero) = {p0}"),
        ],
        distribution: Some(distribution),
    })
}

/// A complex number `a + bi` used as a two-level classical bit: `1` stands
/// for logical 0 and `i` for logical 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexBit(pub Complex64);

impl ComplexBit {
    /// `1 + i`, the equal superposition.
    pub const SUPERPOSITION: ComplexBit = ComplexBit(Complex64::new(1.0, 1.0));

    pub fn is_imaginary(self) -> bool {
        self.0.re.abs() < PURITY_TOLERANCE * self.0.im.abs()
    }

    pub fn is_real(self) -> bool {
        self.0.im.abs() < PURITY_TOLERANCE * self.0.re.abs()
    }

    /// Read-out of a black-box output `w` for input `self`: `½·self·w`.
    pub fn project(self, w: ComplexBit) -> ComplexBit {
        ComplexBit(self.0 * w.0 * 0.5)
    }

    /// `(is_imaginary, is_negative)`, or an error when neither pure.
    fn decode(self) -> Result<(bool, bool), SolverError> {
        if self.is_imaginary() {
            Ok((true, self.0.im < 0.0))
        } else if self.is_real() {
            Ok((false, self.0.re < 0.0))
        } else {
            Err(SolverError::Ambiguous {
                re: self.0.re,
                im: self.0.im,
            })
        }
    }
}

impl fmt::Display for ComplexBit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.0.re, self.0.im)
    }
}

fn sign(bit: bool) -> f64 {
    if bit {
        -1.0
    } else {
        1.0
    }
}

/// `a + bi → (-1)^{p}(a + (-1)^{q} b i)`.
fn signed_conjugation(z: ComplexBit, p: bool, q: bool) -> ComplexBit {
    ComplexBit(Complex64::new(z.0.re, sign(q) * z.0.im) * sign(p))
}

/// Black-box acting on complex bits, for `n = 1` and `n = 2`.
#[derive(Debug)]
pub struct ComplexBitOracle {
    oracle: Oracle,
}

impl ComplexBitOracle {
    pub fn new(f: BooleanFunction) -> Result<Self, SolverError> {
        if f.n() > 2 {
            return Err(SolverError::ArityMismatch {
                expected: 2,
                found: f.n(),
            });
        }
        Ok(ComplexBitOracle {
            oracle: Oracle::new(f),
        })
    }

    /// `C_f(a + bi) = (-1)^{f(0)}(a + (-1)^{f(0)⊕f(1)} b i)`.
    pub fn apply_one(&self, z: ComplexBit) -> Result<ComplexBit, SolverError> {
        let f = self.oracle.function();
        if f.n() != 1 {
            return Err(SolverError::ArityMismatch {
                expected: 1,
                found: f.n(),
            });
        }
        self.oracle.record_query();
        let (f0, f1) = (f.eval(0), f.eval(1));
        Ok(signed_conjugation(z, f0, f0 ^ f1))
    }

    /// Two-component form: the first bit picks up `(-1)^{f(00)}` and
    /// conjugates when `f(00) ⊕ f(10) = 1`; the second conjugates when
    /// `f(10) ⊕ f(11) = 1`.
    pub fn apply_two(&self, z: [ComplexBit; 2]) -> Result<[ComplexBit; 2], SolverError> {
        let f = self.oracle.function();
        if f.n() != 2 {
            return Err(SolverError::ArityMismatch {
                expected: 2,
                found: f.n(),
            });
        }
        self.oracle.record_query();
        let (f00, f10, f11) = (f.eval(0b00), f.eval(0b10), f.eval(0b11));
        Ok([
            signed_conjugation(z[0], f00, f00 ^ f10),
            signed_conjugation(z[1], false, f10 ^ f11),
        ])
    }

    pub fn queries(&self) -> u64 {
        self.oracle.queries()
    }
}

/// Deutsch's problem with one complex bit.
///
/// `w = ½·z·C_f(z)` with `z = 1 + i` is `±i` for constant and `±1` for
/// balanced `f`; the sign gives `f(0)`.
pub fn solve_deutsch_classical(f: &BooleanFunction) -> Result<SolveResult, SolverError> {
    if f.n() != 1 {
        return Err(SolverError::ArityMismatch {
            expected: 1,
            found: f.n(),
        });
    }
    let black_box = ComplexBitOracle::new(f.clone())?;
    let z = ComplexBit::SUPERPOSITION;
    let w = z.project(black_box.apply_one(z)?);
    let (imaginary, negative) = w.decode()?;
    let f0 = negative;
    let f1 = if imaginary { f0 } else { !f0 };
    let identified = BooleanFunction::new(vec![f0, f1])?;
    Ok(SolveResult {
        verdict: if imaginary {
            Verdict::Constant
        } else {
            Verdict::Balanced
        },
        identified_function: Some(identified),
        oracle_calls: black_box.queries(),
        distribution: None,
        trace: vec![format!("z = {z}"), format!("z*C_f(z)/2 = {w}")],
    })
}

/// The `n = 2` problem with two complex bits.
///
/// Outputs are `((-1)^{f(00)}·{i or 1}, {i or 1})`; both imaginary means
/// constant. The sign of the first gives `f(00)`, which pins down `f`.
pub fn solve_dj2_classical(f: &BooleanFunction) -> Result<SolveResult, SolverError> {
    if f.n() != 2 {
        return Err(SolverError::ArityMismatch {
            expected: 2,
            found: f.n(),
        });
    }
    let black_box = ComplexBitOracle::new(f.clone())?;
    let z = ComplexBit::SUPERPOSITION;
    let out = black_box.apply_two([z, z])?;
    let w = [z.project(out[0]), z.project(out[1])];
    let (first_imaginary, f00) = w[0].decode()?;
    let (second_imaginary, _) = w[1].decode()?;
    let f10 = f00 ^ !first_imaginary;
    let f11 = f10 ^ !second_imaginary;
    // separable functions satisfy f(00) ⊕ f(11) = f(01) ⊕ f(10)
    let f01 = f00 ^ f10 ^ f11;
    let identified = BooleanFunction::new(vec![f00, f01, f10, f11])?;
    if identified != *f {
        return Err(SolverError::DecodeMismatch {
            decoded: identified.to_bit_string(),
        });
    }
    Ok(SolveResult {
        verdict: if first_imaginary && second_imaginary {
            Verdict::Constant
        } else {
            Verdict::Balanced
        },
        identified_function: Some(identified),
        oracle_calls: black_box.queries(),
        distribution: None,
        trace: vec![
            format!("z = {z}"),
            format!("z*C_f(z, z)/2 = ({}, {})", w[0], w[1]),
        ],
    })
}

/// A black-box of the form `U_1 ⊗ … ⊗ U_n` acting on `n` independent
/// two-component complex vectors.
#[derive(Debug)]
pub struct ClassicalVectorOracle {
    factors: Vec<Mat2>,
    queries: AtomicU64,
}

impl ClassicalVectorOracle {
    pub fn new(factors: Vec<Mat2>) -> Result<Self, SolverError> {
        for (index, u) in factors.iter().enumerate() {
            let defect = u.unitarity_defect();
            if !(defect < UNITARY_TOLERANCE) {
                return Err(SolverError::NotUnitary { index, defect });
            }
        }
        Ok(ClassicalVectorOracle {
            factors,
            queries: AtomicU64::new(0),
        })
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Mat2] {
        &self.factors
    }

    /// `(α_i, β_i) → (aα_i + bβ_i, cα_i + dβ_i)` for every `i`; one query.
    pub fn query(&self, register: &mut [Amp2]) -> Result<(), SolverError> {
        if register.len() != self.factors.len() {
            return Err(SolverError::QubitMismatch {
                flow: register.len(),
                oracle: self.factors.len(),
            });
        }
        self.queries.fetch_add(1, Ordering::Relaxed);
        for (v, u) in register.iter_mut().zip(&self.factors) {
            *v = u.apply(*v);
        }
        Ok(())
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }
}

#[derive(Debug)]
pub enum ProductOracle {
    Separable(ClassicalVectorOracle),
    Entangled { qubit: usize },
}

/// Unitary sending `|+⟩ → φ` and `|−⟩ → (φ̄_1, −φ̄_0)`; determinant 1.
fn complete_from_plus(phi: Amp2) -> Mat2 {
    let psi = [phi[1].conj(), -phi[0].conj()];
    let h = math::FRAC_1_SQRT_2;
    Mat2::new(
        (phi[0] + psi[0]) * h,
        (phi[0] - psi[0]) * h,
        (phi[1] + psi[1]) * h,
        (phi[1] - psi[1]) * h,
    )
}

/// Splits the phase oracle of a valid `f` into single-qubit unitaries, if
/// its image of `|+⟩^{⊗n}` is a product state.
///
/// Only the image of `|+⟩` is fixed by the oracle; the image of `|−⟩` is
/// the orthogonal completion with determinant 1. The global phase goes to
/// factor 0.
pub fn extract_product_oracle(f: &BooleanFunction) -> Result<ProductOracle, SolverError> {
    if !classify(f).kind.is_valid() {
        return Err(promise_error(f, None));
    }
    let image = oracle::apply_phase_oracle(f, &StateVector::plus(f.n())?)?;
    let product = match factor_product_state(&image)? {
        Factorization::Product(p) => p,
        Factorization::Entangled { qubit } => return Ok(ProductOracle::Entangled { qubit }),
    };
    let factors = product
        .factors
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let mut phi = [q.amplitude(0), q.amplitude(1)];
            if i == 0 {
                phi = [phi[0] * product.global_phase, phi[1] * product.global_phase];
            }
            complete_from_plus(phi)
        })
        .collect();
    Ok(ProductOracle::Separable(ClassicalVectorOracle::new(
        factors,
    )?))
}

/// One step of a product-state flow.
#[derive(Debug, Clone, PartialEq)]
pub enum FlowStep {
    Gate { qubit: usize, gate: Mat2 },
    GateAll(Mat2),
    Query,
}

/// A black-box algorithm in the vocabulary the de-quantiser accepts:
/// single-qubit gates, oracle queries, and a final measurement of
/// `measured`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductFlow {
    pub n: usize,
    pub initial: Vec<Amp2>,
    pub steps: Vec<FlowStep>,
    pub measured: Vec<usize>,
}

impl ProductFlow {
    /// `|0⟩^{⊗n}`, no steps, every qubit measured.
    pub fn new(n: usize) -> Self {
        let zero = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        ProductFlow {
            n,
            initial: vec![zero; n],
            steps: Vec::new(),
            measured: (0..n).collect(),
        }
    }

    /// `H^{⊗n}`, one query, `H^{⊗n}`, measure all.
    pub fn deutsch_jozsa(n: usize) -> Self {
        let mut flow = ProductFlow::new(n);
        flow.steps = vec![
            FlowStep::GateAll(Mat2::hadamard()),
            FlowStep::Query,
            FlowStep::GateAll(Mat2::hadamard()),
        ];
        flow
    }

    pub fn query_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == FlowStep::Query).count()
    }

    fn validate(&self) -> Result<(), SolverError> {
        let check = |qubit: usize| {
            if qubit < self.n {
                Ok(())
            } else {
                Err(SolverError::QubitOutOfRange { qubit, n: self.n })
            }
        };
        if self.initial.len() != self.n {
            return Err(SolverError::QubitMismatch {
                flow: self.initial.len(),
                oracle: self.n,
            });
        }
        for (index, step) in self.steps.iter().enumerate() {
            let gate = match step {
                FlowStep::Gate { qubit, gate } => {
                    check(*qubit)?;
                    gate
                }
                FlowStep::GateAll(gate) => gate,
                FlowStep::Query => continue,
            };
            let defect = gate.unitarity_defect();
            if !(defect < UNITARY_TOLERANCE) {
                return Err(SolverError::NotUnitary { index, defect });
            }
        }
        self.measured.iter().try_for_each(|&q| check(q))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DequantisedRun {
    pub distribution: MeasurementDistribution,
    pub oracle_calls: u64,
}

/// Runs `flow` on `n` two-component vectors, never forming a joint state.
/// The result is the product of the per-qubit outcome distributions.
pub fn run_dequantised(
    oracle: &ClassicalVectorOracle,
    flow: &ProductFlow,
) -> Result<DequantisedRun, SolverError> {
    flow.validate()?;
    if oracle.n() != flow.n {
        return Err(SolverError::QubitMismatch {
            flow: flow.n,
            oracle: oracle.n(),
        });
    }
    let before = oracle.queries();
    let mut register = flow.initial.clone();
    for step in &flow.steps {
        match step {
            FlowStep::Gate { qubit, gate } => register[*qubit] = gate.apply(register[*qubit]),
            FlowStep::GateAll(gate) => register.iter_mut().for_each(|v| *v = gate.apply(*v)),
            FlowStep::Query => oracle.query(&mut register)?,
        }
    }
    let mut distribution: Option<MeasurementDistribution> = None;
    for &q in &flow.measured {
        let [a, b] = register[q];
        let (p0, p1) = (a.norm_sqr(), b.norm_sqr());
        let total = p0 + p1;
        let single = MeasurementDistribution::new(vec![p0 / total, p1 / total])?;
        distribution = Some(match distribution {
            None => single,
            Some(d) => d.product(&single),
        });
    }
    Ok(DequantisedRun {
        distribution: distribution.unwrap_or_else(|| MeasurementDistribution::deterministic(0, 0)),
        oracle_calls: oracle.queries() - before,
    })
}

/// Applies `U_1 ⊗ … ⊗ U_n` to a full state vector.
pub fn apply_product_unitary(
    s: &StateVector,
    factors: &[Mat2],
) -> Result<StateVector, SolverError> {
    if factors.len() != s.n() {
        return Err(SolverError::QubitMismatch {
            flow: s.n(),
            oracle: factors.len(),
        });
    }
    let mut out = s.clone();
    for (q, u) in factors.iter().enumerate() {
        out = out.apply_single_qubit(q, u)?;
    }
    Ok(out)
}

/// Runs `flow` on the full `2^n` state vector, calling `query` for each
/// oracle step. Returns the final distribution and the number of queries.
pub fn run_state_vector(
    flow: &ProductFlow,
    mut query: impl FnMut(&StateVector) -> Result<StateVector, SolverError>,
) -> Result<(MeasurementDistribution, u64), SolverError> {
    flow.validate()?;
    let mut state: Option<StateVector> = None;
    for v in &flow.initial {
        let q = StateVector::from_amplitudes(vec![v[0], v[1]])?;
        state = Some(match state {
            None => q,
            Some(s) => tensor(&s, &q)?,
        });
    }
    let mut state = state.ok_or(StateError::NoQubits)?;
    let mut calls = 0;
    for step in &flow.steps {
        state = match step {
            FlowStep::Gate { qubit, gate } => state.apply_single_qubit(*qubit, gate)?,
            FlowStep::GateAll(gate) => {
                let mut s = state;
                for q in 0..flow.n {
                    s = s.apply_single_qubit(q, gate)?;
                }
                s
            }
            FlowStep::Query => {
                calls += 1;
                query(&state)?
            }
        };
    }
    Ok((measure_distribution(&state, &flow.measured)?, calls))
}

/// De-quantised Deutsch-Jozsa: product oracle on `n` independent vectors.
/// Fails with [`SolverError::Entangled`] outside the separable family.
pub fn solve_dj_dequantised(f: &BooleanFunction) -> Result<SolveResult, SolverError> {
    let oracle = match extract_product_oracle(f)? {
        ProductOracle::Separable(o) => o,
        ProductOracle::Entangled { qubit } => return Err(SolverError::Entangled { qubit }),
    };
    let run = run_dequantised(&oracle, &ProductFlow::deutsch_jozsa(f.n()))?;
    let p0 = run.distribution.probability(0);
    let verdict = verdict_from_zero_probability(f, p0)?;
    Ok(SolveResult {
        verdict,
        identified_function: None,
        oracle_calls: run.oracle_calls,
        trace: vec![
            format!("split oracle into {} single-qubit unitaries", oracle.n()),
            format!("P(all zero) = {p0}"),
        ],
        distribution: Some(run.distribution),
    })
}

/// Total variation distance `½·Σ|p_i − q_i|`.
pub fn distribution_distance(
    p: &MeasurementDistribution,
    q: &MeasurementDistribution,
) -> Result<f64, SolverError> {
    if p.len() != q.len() {
        return Err(StateError::OutcomeSpaceMismatch {
            left: p.len(),
            right: q.len(),
        }
        .into());
    }
    Ok(0.5
        * p.probabilities()
            .iter()
            .zip(q.probabilities())
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::parse_truth_table;

    fn tt(s: &str) -> BooleanFunction {
        parse_truth_table(s, None).unwrap()
    }

    fn i() -> Complex64 {
        Complex64::new(0.0, 1.0)
    }

    #[test]
    fn quantum_examples() {
        let r = solve_dj_quantum(&tt("0000")).unwrap();
        assert_eq!(r.verdict, Verdict::Constant);
        assert_eq!(r.distribution.as_ref().unwrap().probability(0), 1.0);
        assert_eq!(r.oracle_calls, 1);
        let r = solve_dj_quantum(&tt("0110")).unwrap();
        assert_eq!(r.verdict, Verdict::Balanced);
        assert_eq!(r.distribution.unwrap().probability(0), 0.0);
        let r = solve_dj_quantum(&tt("00011110")).unwrap();
        assert_eq!(r.verdict, Verdict::Balanced);
        assert!(matches!(
            solve_dj_quantum(&tt("0111")),
            Err(SolverError::PromiseViolated {
                zero_probability: Some(p),
                ..
            }) if p == 0.25
        ));
    }

    #[test]
    fn deutsch_complex_bit_outputs() {
        let cases = [
            ("00", i(), Verdict::Constant),
            ("11", -i(), Verdict::Constant),
            ("01", Complex64::new(1.0, 0.0), Verdict::Balanced),
            ("10", Complex64::new(-1.0, 0.0), Verdict::Balanced),
        ];
        for (table, expected_w, verdict) in cases {
            let f = tt(table);
            let bb = ComplexBitOracle::new(f.clone()).unwrap();
            let z = ComplexBit::SUPERPOSITION;
            let w = z.project(bb.apply_one(z).unwrap());
            assert_eq!(w.0, expected_w, "{table}");
            let r = solve_deutsch_classical(&f).unwrap();
            assert_eq!(r.verdict, verdict);
            assert_eq!(r.identified_function, Some(f));
            assert_eq!(r.oracle_calls, 1);
        }
    }

    #[test]
    fn dj2_complex_bit_outputs() {
        let z = ComplexBit::SUPERPOSITION;
        let run = |t: &str| {
            let bb = ComplexBitOracle::new(tt(t)).unwrap();
            let out = bb.apply_two([z, z]).unwrap();
            [z.project(out[0]).0, z.project(out[1]).0]
        };
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(run("0000"), [i(), i()]);
        assert_eq!(run("0011"), [one, i()]);
        assert_eq!(run("0110"), [one, one]);
        assert_eq!(run("1111"), [-i(), i()]);
        let r = solve_dj2_classical(&tt("0011")).unwrap();
        assert_eq!(r.verdict, Verdict::Balanced);
        assert_eq!(r.identified_function, Some(tt("0011")));
        assert!(matches!(
            solve_dj2_classical(&tt("0111")),
            Err(SolverError::DecodeMismatch { .. })
        ));
        assert!(matches!(
            solve_dj2_classical(&tt("01")),
            Err(SolverError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn product_oracle_examples() {
        let ProductOracle::Separable(o) = extract_product_oracle(&tt("0110")).unwrap() else {
            panic!("0110 is separable");
        };
        let h = math::FRAC_1_SQRT_2;
        let plus = [Complex64::new(h, 0.0), Complex64::new(h, 0.0)];
        for u in o.factors() {
            let out = u.apply(plus);
            assert!(math::abs(out[0] - h) < 1e-15 && math::abs(out[1] + h) < 1e-15);
            assert!(math::abs(u.det() - 1.0) < 1e-15);
        }
        let ProductOracle::Separable(o) = extract_product_oracle(&tt("0000")).unwrap() else {
            panic!("constant is separable");
        };
        assert!(o
            .factors()
            .iter()
            .all(|u| u.phase_aligned_distance(&Mat2::IDENTITY).0 < 1e-15));
        assert!(matches!(
            extract_product_oracle(&tt("00011110")).unwrap(),
            ProductOracle::Entangled { .. }
        ));
    }

    #[test]
    fn dequantised_dj_flow() {
        let ProductOracle::Separable(o) = extract_product_oracle(&tt("0110")).unwrap() else {
            panic!("0110 is separable");
        };
        let run = run_dequantised(&o, &ProductFlow::deutsch_jozsa(2)).unwrap();
        assert!((run.distribution.probability(0b11) - 1.0).abs() < 1e-12);
        assert_eq!(run.oracle_calls, 1);
        let quantum = solve_dj_quantum(&tt("0110")).unwrap();
        let d = distribution_distance(&run.distribution, quantum.distribution.as_ref().unwrap())
            .unwrap();
        assert!(d < 1e-12);
    }

    #[test]
    fn identity_oracle_is_transparent() {
        let o = ClassicalVectorOracle::new(vec![Mat2::IDENTITY; 3]).unwrap();
        let mut with = ProductFlow::new(3);
        with.steps = vec![
            FlowStep::Gate {
                qubit: 1,
                gate: Mat2::hadamard(),
            },
            FlowStep::Query,
            FlowStep::Gate {
                qubit: 2,
                gate: Mat2::rotation(0.4),
            },
        ];
        let mut without = with.clone();
        without.steps.retain(|s| *s != FlowStep::Query);
        let a = run_dequantised(&o, &with).unwrap();
        let b = run_dequantised(&o, &without).unwrap();
        assert_eq!(a.distribution, b.distribution);
    }

    #[test]
    fn rejects_non_unitary_factors() {
        let bad = Mat2::real(1.0, 1.0, 0.0, 1.0);
        assert!(matches!(
            ClassicalVectorOracle::new(vec![Mat2::IDENTITY, bad]),
            Err(SolverError::NotUnitary { index: 1, .. })
        ));
    }

    #[test]
    fn distances() {
        let p = MeasurementDistribution::deterministic(1, 0);
        let q = MeasurementDistribution::deterministic(1, 1);
        assert_eq!(distribution_distance(&p, &p).unwrap(), 0.0);
        assert_eq!(distribution_distance(&p, &q).unwrap(), 1.0);
        let r = MeasurementDistribution::deterministic(2, 0);
        assert!(distribution_distance(&p, &r).is_err());
    }

    #[test]
    fn dequantised_solver_rejects_entangled() {
        assert!(matches!(
            solve_dj_dequantised(&tt("00011110")),
            Err(SolverError::Entangled { qubit: 1 })
        ));
        let r = solve_dj_dequantised(&tt("01101001")).unwrap();
        assert_eq!(r.verdict, Verdict::Balanced);
        assert_eq!(r.oracle_calls, 1);
    }
}
