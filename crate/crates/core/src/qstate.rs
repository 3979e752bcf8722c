//! n-qubit state vectors.
//!
//! Basis index `i` encodes the bit string `x` big-endian: qubit 0 is the
//! most significant bit, so `|01⟩` is index 1 and `|10⟩` is index 2.
//!
//! Two storage forms exist. The exact form holds integer coefficients `v_i`
//! and a half-exponent `e` with amplitude `v_i · 2^{-e/2}`; every state the
//! Deutsch-Jozsa circuit produces (basis states, `±2^{-n/2}` sign vectors and
//! their Walsh-Hadamard images) lives there without rounding. Anything else
//! is stored as `Complex64`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_core::RngCore;
use thiserror::Error;

use crate::limits;
use crate::linalg::Mat2;
use crate::math;

/// Normalisation tolerance applied when validating caller-supplied amplitudes.
pub const NORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("basis index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: u64, n: usize },
    #[error("{requested} qubits exceeds the configured maximum of {max}")]
    TooManyQubits { requested: usize, max: usize },
    #[error("a state needs at least one qubit")]
    NoQubits,
    #[error("amplitude count {0} is not a power of two")]
    BadLength(usize),
    #[error("state is not normalised: squared norm {0}")]
    NotNormalised(f64),
    #[error("sign entries must be +1 or -1")]
    BadSign,
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },
    #[error("qubit index {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("qubit {0} listed more than once")]
    DuplicateQubit(usize),
    #[error("probabilities sum to {0}, expected 1")]
    BadDistribution(f64),
    #[error("distributions over different outcome spaces ({left} vs {right} outcomes)")]
    OutcomeSpaceMismatch { left: usize, right: usize },
}

/// Which storage form a [`StateVector`] currently uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// Every amplitude is exactly `±2^{-n/2}`.
    ExactSign,
    /// Integer coefficients over a power of `√2`, not all of equal magnitude.
    ExactDyadic,
    /// Double-precision complex amplitudes.
    Complex,
}

#[derive(Debug, Clone, PartialEq)]
enum Amplitudes {
    Exact { coeffs: Vec<i64>, half_exp: u32 },
    Complex(Vec<Complex64>),
}

/// Pure state of `n` qubits. Immutable: every operation returns a new value.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Amplitudes,
}

fn check_qubits(n: usize) -> Result<(), StateError> {
    if n == 0 {
        return Err(StateError::NoQubits);
    }
    let max = limits::max_qubits();
    if n > max {
        return Err(StateError::TooManyQubits { requested: n, max });
    }
    Ok(())
}

fn log2_exact(len: usize) -> Option<usize> {
    (len.is_power_of_two()).then(|| len.trailing_zeros() as usize)
}

/// Integer Walsh-Hadamard butterfly. `None` on overflow.
fn fwht_i64(a: &mut [i64]) -> Option<()> {
    let len = a.len();
    let mut h = 1;
    while h < len {
        for block in (0..len).step_by(2 * h) {
            for j in block..block + h {
                let (x, y) = (a[j], a[j + h]);
                a[j] = x.checked_add(y)?;
                a[j + h] = x.checked_sub(y)?;
            }
        }
        h *= 2;
    }
    Some(())
}

fn fwht_complex(a: &mut [Complex64]) {
    let len = a.len();
    let mut h = 1;
    while h < len {
        for block in (0..len).step_by(2 * h) {
            for j in block..block + h {
                let (x, y) = (a[j], a[j + h]);
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
        h *= 2;
    }
}

/// Strips common factors of two so that equal exact states share one form.
fn reduce_exact(coeffs: &mut [i64], half_exp: &mut u32) {
    while *half_exp >= 2 && coeffs.iter().all(|c| c % 2 == 0) {
        coeffs.iter_mut().for_each(|c| *c /= 2);
        *half_exp -= 2;
    }
}

impl StateVector {
    /// Computational basis state `|i⟩` on `n` qubits.
    pub fn basis(n: usize, index: u64) -> Result<Self, StateError> {
        check_qubits(n)?;
        if index >= (1u64 << n) {
            return Err(StateError::IndexOutOfRange { index, n });
        }
        let mut coeffs = vec![0i64; 1 << n];
        coeffs[index as usize] = 1;
        Ok(StateVector {
            n,
            amps: Amplitudes::Exact {
                coeffs,
                half_exp: 0,
            },
        })
    }

    /// `|+⟩^{⊗n}`.
    pub fn plus(n: usize) -> Result<Self, StateError> {
        check_qubits(n)?;
        Self::from_signs(&vec![1i8; 1 << n])
    }

    /// Sign vector `(s_0, …, s_{N-1}) · 2^{-n/2}` with every `s_i = ±1`.
    pub fn from_signs(signs: &[i8]) -> Result<Self, StateError> {
        let n = log2_exact(signs.len()).ok_or(StateError::BadLength(signs.len()))?;
        check_qubits(n)?;
        let coeffs = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(1i64),
                -1 => Ok(-1i64),
                _ => Err(StateError::BadSign),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StateVector {
            n,
            amps: Amplitudes::Exact {
                coeffs,
                half_exp: n as u32,
            },
        })
    }

    /// Exact state with amplitudes `coeffs[i] · 2^{-half_exp/2}`.
    pub fn from_exact(coeffs: Vec<i64>, half_exp: u32) -> Result<Self, StateError> {
        let n = log2_exact(coeffs.len()).ok_or(StateError::BadLength(coeffs.len()))?;
        check_qubits(n)?;
        let norm: i128 = coeffs.iter().map(|&c| (c as i128) * (c as i128)).sum();
        if half_exp >= 127 || norm != 1i128 << half_exp {
            let approx = norm as f64 * math::ldexp(1.0, -(half_exp as i32));
            return Err(StateError::NotNormalised(approx));
        }
        let mut coeffs = coeffs;
        let mut half_exp = half_exp;
        reduce_exact(&mut coeffs, &mut half_exp);
        Ok(StateVector {
            n,
            amps: Amplitudes::Exact { coeffs, half_exp },
        })
    }

    /// Complex amplitudes; must be normalised within [`NORM_TOLERANCE`].
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, StateError> {
        let n = log2_exact(amps.len()).ok_or(StateError::BadLength(amps.len()))?;
        check_qubits(n)?;
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(StateError::NotNormalised(norm));
        }
        Ok(StateVector {
            n,
            amps: Amplitudes::Complex(amps),
        })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self, StateError> {
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(StateError::NotNormalised(norm));
        }
        let s = 1.0 / math::sqrt(norm);
        Self::from_amplitudes(amps.into_iter().map(|a| a * s).collect())
    }

    /// Single-qubit state `(α, β)`, normalised on construction.
    pub fn qubit(alpha: Complex64, beta: Complex64) -> Result<Self, StateError> {
        Self::normalized(vec![alpha, beta])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of amplitudes, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn representation(&self) -> Representation {
        match &self.amps {
            Amplitudes::Complex(_) => Representation::Complex,
            Amplitudes::Exact { coeffs, half_exp } => {
                if *half_exp as usize == self.n && coeffs.iter().all(|c| c.abs() == 1) {
                    Representation::ExactSign
                } else {
                    Representation::ExactDyadic
                }
            }
        }
    }

    /// Integer coefficients and half-exponent when the state is exact.
    pub fn exact_coeffs(&self) -> Option<(&[i64], u32)> {
        match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => Some((coeffs, *half_exp)),
            Amplitudes::Complex(_) => None,
        }
    }

    /// Per-index signs when the state is an exact `±2^{-n/2}` sign vector.
    pub fn signs(&self) -> Option<Vec<i8>> {
        match (&self.amps, self.representation()) {
            (Amplitudes::Exact { coeffs, .. }, Representation::ExactSign) => {
                Some(coeffs.iter().map(|&c| c as i8).collect())
            }
            _ => None,
        }
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => {
                Complex64::new(coeffs[index] as f64 * math::inv_sqrt2_pow(*half_exp), 0.0)
            }
            Amplitudes::Complex(a) => a[index],
        }
    }

    pub fn amplitudes(&self) -> Vec<Complex64> {
        match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => {
                let s = math::inv_sqrt2_pow(*half_exp);
                coeffs
                    .iter()
                    .map(|&c| Complex64::new(c as f64 * s, 0.0))
                    .collect()
            }
            Amplitudes::Complex(a) => a.clone(),
        }
    }

    /// `|α_i|²`, exact for exact states with coefficients below `2^26`.
    pub fn probability(&self, index: usize) -> f64 {
        match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => {
                let c = coeffs[index] as f64;
                math::ldexp(c * c, -(*half_exp as i32))
            }
            Amplitudes::Complex(a) => a[index].norm_sqr(),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        (0..self.len()).map(|i| self.probability(i)).sum()
    }

    /// Same state in complex storage.
    pub fn to_complex(&self) -> StateVector {
        StateVector {
            n: self.n,
            amps: Amplitudes::Complex(self.amplitudes()),
        }
    }

    /// `-|ψ⟩`; stays exact.
    pub fn negated(&self) -> StateVector {
        let amps = match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => Amplitudes::Exact {
                coeffs: coeffs.iter().map(|c| -c).collect(),
                half_exp: *half_exp,
            },
            Amplitudes::Complex(a) => Amplitudes::Complex(a.iter().map(|c| -c).collect()),
        };
        StateVector { n: self.n, amps }
    }

    /// `λ|ψ⟩` for a unit-modulus `λ`. Real `±1` keeps exact storage.
    pub fn with_phase(&self, lambda: Complex64) -> StateVector {
        if lambda == Complex64::new(1.0, 0.0) {
            return self.clone();
        }
        if lambda == Complex64::new(-1.0, 0.0) {
            return self.negated();
        }
        StateVector {
            n: self.n,
            amps: Amplitudes::Complex(self.amplitudes().into_iter().map(|a| a * lambda).collect()),
        }
    }

    /// Multiplies amplitude `i` by `-1` wherever `flip(i)` holds.
    pub(crate) fn map_signs(&self, flip: impl Fn(usize) -> bool) -> StateVector {
        let amps = match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => Amplitudes::Exact {
                coeffs: coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| if flip(i) { -c } else { c })
                    .collect(),
                half_exp: *half_exp,
            },
            Amplitudes::Complex(a) => Amplitudes::Complex(
                a.iter()
                    .enumerate()
                    .map(|(i, &c)| if flip(i) { -c } else { c })
                    .collect(),
            ),
        };
        StateVector { n: self.n, amps }
    }

    /// Output amplitude `i` is input amplitude `source(i)`; `source` must be
    /// a permutation of the index space.
    pub(crate) fn permute(&self, source: impl Fn(usize) -> usize) -> StateVector {
        let len = self.len();
        let amps = match &self.amps {
            Amplitudes::Exact { coeffs, half_exp } => Amplitudes::Exact {
                coeffs: (0..len).map(|i| coeffs[source(i)]).collect(),
                half_exp: *half_exp,
            },
            Amplitudes::Complex(a) => Amplitudes::Complex((0..len).map(|i| a[source(i)]).collect()),
        };
        StateVector { n: self.n, amps }
    }

    /// Applies a 2×2 gate to one qubit. Always yields complex storage.
    pub fn apply_single_qubit(&self, qubit: usize, gate: &Mat2) -> Result<StateVector, StateError> {
        if qubit >= self.n {
            return Err(StateError::QubitOutOfRange { qubit, n: self.n });
        }
        let mut a = self.amplitudes();
        let stride = 1usize << (self.n - 1 - qubit);
        for block in (0..a.len()).step_by(2 * stride) {
            for j in block..block + stride {
                let [x, y] = gate.apply([a[j], a[j + stride]]);
                a[j] = x;
                a[j + stride] = y;
            }
        }
        Ok(StateVector {
            n: self.n,
            amps: Amplitudes::Complex(a),
        })
    }

    /// Draws a random state: i.i.d. complex Gaussian amplitudes (via
    /// Box-Muller on `rng`) normalised to unit length.
    pub fn random<R: RngCore>(n: usize, rng: &mut R) -> Result<StateVector, StateError> {
        check_qubits(n)?;
        let amps = (0..1usize << n)
            .map(|_| {
                let (re, im) = gaussian_pair(rng);
                Complex64::new(re, im)
            })
            .collect();
        Self::normalized(amps)
    }
}

fn unit_f64<R: RngCore>(rng: &mut R) -> f64 {
    // 53 random bits in [0, 1)
    (rng.next_u64() >> 11) as f64 * math::ldexp(1.0, -53)
}

pub(crate) fn gaussian_pair<R: RngCore>(rng: &mut R) -> (f64, f64) {
    let u1 = 1.0 - unit_f64(rng);
    let u2 = unit_f64(rng);
    let r = math::sqrt(-2.0 * libm::log(u1));
    let t = 2.0 * core::f64::consts::PI * u2;
    (r * math::cos(t), r * math::sin(t))
}

/// `|i⟩` on `n` qubits.
pub fn make_basis_state(n: usize, index: u64) -> Result<StateVector, StateError> {
    StateVector::basis(n, index)
}

/// `H^{⊗n}` via an in-place Walsh-Hadamard butterfly, `O(n·2^n)`.
///
/// Exact states stay exact: the integer transform is applied to the
/// coefficients and the half-exponent grows by `n`.
pub fn hadamard_all(s: &StateVector) -> StateVector {
    let n = s.n;
    if let Amplitudes::Exact { coeffs, half_exp } = &s.amps {
        let mut c = coeffs.clone();
        if fwht_i64(&mut c).is_some() {
            let mut e = half_exp + n as u32;
            reduce_exact(&mut c, &mut e);
            return StateVector {
                n,
                amps: Amplitudes::Exact {
                    coeffs: c,
                    half_exp: e,
                },
            };
        }
    }
    let mut a = s.amplitudes();
    fwht_complex(&mut a);
    let scale = math::inv_sqrt2_pow(n as u32);
    a.iter_mut().for_each(|x| *x *= scale);
    StateVector {
        n,
        amps: Amplitudes::Complex(a),
    }
}

/// `|a⟩ ⊗ |b⟩`; amplitude `a_i·b_j` lands at index `i·2^{n_b} + j`.
pub fn tensor(a: &StateVector, b: &StateVector) -> Result<StateVector, StateError> {
    let n = a.n + b.n;
    check_qubits(n)?;
    if let (
        Amplitudes::Exact {
            coeffs: ca,
            half_exp: ea,
        },
        Amplitudes::Exact {
            coeffs: cb,
            half_exp: eb,
        },
    ) = (&a.amps, &b.amps)
    {
        let product: Option<Vec<i64>> = ca
            .iter()
            .flat_map(|&x| cb.iter().map(move |&y| x.checked_mul(y)))
            .collect();
        if let Some(mut coeffs) = product {
            let mut half_exp = ea + eb;
            reduce_exact(&mut coeffs, &mut half_exp);
            return Ok(StateVector {
                n,
                amps: Amplitudes::Exact { coeffs, half_exp },
            });
        }
    }
    let (aa, bb) = (a.amplitudes(), b.amplitudes());
    let amps = aa
        .iter()
        .flat_map(|&x| bb.iter().map(move |&y| x * y))
        .collect();
    Ok(StateVector {
        n,
        amps: Amplitudes::Complex(amps),
    })
}

/// Whether `‖a − λb‖ < tol` for some unit `λ`. `λ` is fixed by the first
/// amplitude of `b` whose magnitude exceeds `tol`.
pub fn equal_up_to_global_phase(
    a: &StateVector,
    b: &StateVector,
    tol: f64,
) -> Result<bool, StateError> {
    if a.n != b.n {
        return Err(StateError::QubitMismatch {
            left: a.n,
            right: b.n,
        });
    }
    if let (Some((ca, ea)), Some((cb, eb))) = (a.exact_coeffs(), b.exact_coeffs()) {
        if ea == eb && (ca == cb || ca.iter().zip(cb).all(|(x, y)| *x == -*y)) {
            return Ok(true);
        }
    }
    let (aa, bb) = (a.amplitudes(), b.amplitudes());
    let lambda = match bb.iter().position(|x| math::abs(*x) > tol) {
        Some(k) => math::unit_phase(aa[k] / bb[k]),
        None => Complex64::new(1.0, 0.0),
    };
    let dist_sq: f64 = aa
        .iter()
        .zip(&bb)
        .map(|(x, y)| (x - lambda * y).norm_sqr())
        .sum();
    Ok(math::sqrt(dist_sq) < tol)
}

/// Probability distribution over the outcomes of measuring some qubits.
///
/// Outcome `k` reads the measured qubits in the order they were listed,
/// first listed qubit as the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementDistribution {
    qubits: usize,
    probs: Vec<f64>,
}

impl MeasurementDistribution {
    /// Validates that `probs` has `2^qubits` entries in `[0, 1]` summing to 1
    /// within `1e-12`.
    pub fn new(probs: Vec<f64>) -> Result<Self, StateError> {
        let qubits = log2_exact(probs.len()).ok_or(StateError::BadLength(probs.len()))?;
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 || probs.iter().any(|p| !(0.0..=1.0 + 1e-12).contains(p)) {
            return Err(StateError::BadDistribution(total));
        }
        Ok(MeasurementDistribution { qubits, probs })
    }

    /// Point mass on one outcome.
    pub fn deterministic(qubits: usize, outcome: usize) -> Self {
        let mut probs = vec![0.0; 1 << qubits];
        probs[outcome] = 1.0;
        MeasurementDistribution { qubits, probs }
    }

    /// Joint distribution of independent registers; `self` supplies the
    /// high-order bits.
    pub fn product(&self, other: &MeasurementDistribution) -> MeasurementDistribution {
        let probs = self
            .probs
            .iter()
            .flat_map(|&p| other.probs.iter().map(move |&q| p * q))
            .collect();
        MeasurementDistribution {
            qubits: self.qubits + other.qubits,
            probs,
        }
    }

    /// Number of measured qubits.
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probability(&self, outcome: usize) -> f64 {
        self.probs.get(outcome).copied().unwrap_or(0.0)
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// Outcomes with nonzero probability, in index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.probs
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, p)| *p > 0.0)
    }

    /// Most likely outcome (lowest index on ties).
    pub fn mode(&self) -> usize {
        let mut best = 0;
        for (i, &p) in self.probs.iter().enumerate() {
            if p > self.probs[best] {
                best = i;
            }
        }
        best
    }

    /// Draws one outcome.
    pub fn sample<R: RngCore>(&self, rng: &mut R) -> usize {
        let u = unit_f64(rng);
        let mut acc = 0.0;
        for (i, &p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return i;
            }
        }
        self.support().last().map(|(i, _)| i).unwrap_or(0)
    }
}

/// Marginal distribution over `qubits` without collapsing the state.
pub fn measure_distribution(
    s: &StateVector,
    qubits: &[usize],
) -> Result<MeasurementDistribution, StateError> {
    let mut seen = 0u64;
    for &q in qubits {
        if q >= s.n {
            return Err(StateError::QubitOutOfRange { qubit: q, n: s.n });
        }
        if seen & (1 << q) != 0 {
            return Err(StateError::DuplicateQubit(q));
        }
        seen |= 1 << q;
    }
    let m = qubits.len();
    let mut probs = vec![0.0; 1 << m];
    for i in 0..s.len() {
        let p = s.probability(i);
        if p == 0.0 {
            continue;
        }
        let outcome = qubits
            .iter()
            .fold(0usize, |acc, &q| (acc << 1) | ((i >> (s.n - 1 - q)) & 1));
        probs[outcome] += p;
    }
    Ok(MeasurementDistribution { qubits: m, probs })
}
