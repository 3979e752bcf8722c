//! Separability of pure states.
//!
//! Two independent routes decide full separability:
//!
//! * [`pair_product_invariant`] checks that `α_i·α_{K-i-1}` is constant on
//!   every level `k = 2..=n` (`K = 2^k`, `i < K/2`). For states with no zero
//!   amplitude this is equivalent to full separability.
//! * [`factor_product_state`] peels qubits off one at a time by rank-1
//!   reshaping and returns the factors.
//!
//! Exact states are decided in integer arithmetic; complex states use
//! largest-pivot elimination with tolerance [`RANK_TOLERANCE`].

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_integer::Integer;
use thiserror::Error;

use crate::math;
use crate::oracle::BooleanFunction;
use crate::qstate::{self, Representation, StateError, StateVector};

/// Absolute residual allowed by floating rank-1 tests on normalised states.
pub const RANK_TOLERANCE: f64 = 1e-10;
/// Amplitudes below this magnitude count as zero for the PPI precondition.
pub const ZERO_AMPLITUDE: f64 = 1e-12;
/// Relative tolerance when comparing pair products on complex states.
pub const PPI_RELATIVE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeparabilityError {
    #[error("operation needs at least {min} qubits, state has {n}")]
    TooFewQubits { n: usize, min: usize },
    #[error("qubit index {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("qubit {0} listed more than once")]
    DuplicateQubit(usize),
    #[error("bipartition subset must be nonempty")]
    EmptySubset,
    #[error("bipartition subset must leave at least one qubit out")]
    FullSubset,
    #[error("expected a function of arity {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("zero-norm quotient while peeling qubit {qubit}; input is malformed")]
    ZeroNormQuotient { qubit: usize },
    #[error(transparent)]
    State(#[from] StateError),
}

/// Outcome of one pair-product level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairProductLevel {
    /// Every pair product on level `k` equals `constant`.
    Consistent { k: usize, constant: Complex64 },
    /// `α_first·α_{K-first-1} ≠ α_second·α_{K-second-1}`.
    Violated {
        k: usize,
        first: usize,
        second: usize,
    },
}

impl PairProductLevel {
    pub fn k(&self) -> usize {
        match *self {
            PairProductLevel::Consistent { k, .. } | PairProductLevel::Violated { k, .. } => k,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, PairProductLevel::Consistent { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairProductReport {
    /// Every level consistent.
    pub invariant: bool,
    /// One entry per level `k = 2..=n`.
    pub levels: Vec<PairProductLevel>,
    /// First amplitude with magnitude below [`ZERO_AMPLITUDE`]. When set,
    /// the invariant no longer decides separability and callers should use
    /// [`factor_product_state`].
    pub zero_amplitude: Option<usize>,
    /// Decided in integer arithmetic.
    pub exact: bool,
}

impl PairProductReport {
    pub fn decides_separability(&self) -> bool {
        self.zero_amplitude.is_none()
    }

    /// First violated level as `(k, first, second)`.
    pub fn first_violation(&self) -> Option<(usize, usize, usize)> {
        self.levels.iter().find_map(|l| match *l {
            PairProductLevel::Violated { k, first, second } => Some((k, first, second)),
            PairProductLevel::Consistent { .. } => None,
        })
    }
}

/// Pair product invariance test over the index pairs `(i, k)` with
/// `k ∈ 2..=n` and `i < 2^{k-1}`.
pub fn pair_product_invariant(s: &StateVector) -> Result<PairProductReport, SeparabilityError> {
    let n = s.n();
    if n < 2 {
        return Err(SeparabilityError::TooFewQubits { n, min: 2 });
    }
    let mut levels = Vec::with_capacity(n - 1);
    let (zero_amplitude, exact) = match s.exact_coeffs() {
        Some((coeffs, half_exp)) => {
            for k in 2..=n {
                let big_k = 1usize << k;
                let product = |i: usize| coeffs[i] as i128 * coeffs[big_k - 1 - i] as i128;
                let reference = product(0);
                let level = match (1..big_k / 2).find(|&i| product(i) != reference) {
                    Some(i) => PairProductLevel::Violated {
                        k,
                        first: 0,
                        second: i,
                    },
                    None => PairProductLevel::Consistent {
                        k,
                        constant: Complex64::new(
                            math::ldexp(reference as f64, -(half_exp as i32)),
                            0.0,
                        ),
                    },
                };
                levels.push(level);
            }
            (coeffs.iter().position(|&c| c == 0), true)
        }
        None => {
            let a = s.amplitudes();
            for k in 2..=n {
                let big_k = 1usize << k;
                let product = |i: usize| a[i] * a[big_k - 1 - i];
                let reference = product(0);
                let differs = |p: Complex64| {
                    let scale = math::abs(reference).max(math::abs(p));
                    math::abs(p - reference) > PPI_RELATIVE_TOLERANCE * scale
                };
                let level = match (1..big_k / 2).find(|&i| differs(product(i))) {
                    Some(i) => PairProductLevel::Violated {
                        k,
                        first: 0,
                        second: i,
                    },
                    None => PairProductLevel::Consistent {
                        k,
                        constant: reference,
                    },
                };
                levels.push(level);
            }
            (a.iter().position(|x| math::abs(*x) < ZERO_AMPLITUDE), false)
        }
    };
    Ok(PairProductReport {
        invariant: levels.iter().all(PairProductLevel::is_consistent),
        levels,
        zero_amplitude,
        exact,
    })
}

/// A full tensor factorisation `global_phase · f_0 ⊗ f_1 ⊗ … ⊗ f_{n-1}`.
///
/// Each factor is a normalised single-qubit state whose first nonzero
/// amplitude is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductFactorization {
    pub factors: Vec<StateVector>,
    pub global_phase: Complex64,
}

impl ProductFactorization {
    pub fn reconstruct(&self) -> Result<StateVector, StateError> {
        let mut iter = self.factors.iter();
        let first = iter.next().ok_or(StateError::NoQubits)?.clone();
        let product = iter.try_fold(first, |acc, f| qstate::tensor(&acc, f))?;
        Ok(product.with_phase(self.global_phase))
    }

    /// `|⟨reconstruct|source⟩|²`.
    pub fn fidelity(&self, source: &StateVector) -> Result<f64, StateError> {
        let r = self.reconstruct()?;
        if r.n() != source.n() {
            return Err(StateError::QubitMismatch {
                left: r.n(),
                right: source.n(),
            });
        }
        let overlap: Complex64 = r
            .amplitudes()
            .iter()
            .zip(source.amplitudes())
            .map(|(x, y)| x.conj() * y)
            .sum();
        Ok(overlap.norm_sqr())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Factorization {
    Product(ProductFactorization),
    /// Peeling failed at `qubit`: it is entangled with the qubits after it.
    Entangled {
        qubit: usize,
    },
}

impl Factorization {
    pub fn is_product(&self) -> bool {
        matches!(self, Factorization::Product(_))
    }
}

/// Factors `s` into single-qubit states, peeling qubit 0 first.
pub fn factor_product_state(s: &StateVector) -> Result<Factorization, SeparabilityError> {
    match s.exact_coeffs() {
        Some((coeffs, half_exp)) => factor_exact(coeffs, half_exp),
        None => factor_complex(s.amplitudes()),
    }
}

fn factor_exact(coeffs: &[i64], half_exp: u32) -> Result<Factorization, SeparabilityError> {
    let n = coeffs.len().trailing_zeros() as usize;
    let mut rest: Vec<i64> = coeffs.to_vec();
    // remainder amplitudes are `rest · 2^{-e/2}`
    let mut e = half_exp;
    let mut factors = Vec::with_capacity(n);

    for qubit in 0..n {
        let h = rest.len() / 2;
        let (top, bottom) = rest.split_at(h);
        let j = (0..h)
            .find(|&c| top[c] != 0 || bottom[c] != 0)
            .ok_or(SeparabilityError::ZeroNormQuotient { qubit })?;
        let g = (top[j].unsigned_abs()).gcd(&bottom[j].unsigned_abs()) as i64;
        let (mut u0, mut u1) = (top[j] / g, bottom[j] / g);
        if u0 < 0 || (u0 == 0 && u1 < 0) {
            u0 = -u0;
            u1 = -u1;
        }
        let parallel =
            (0..h).all(|c| top[c] as i128 * u1 as i128 == bottom[c] as i128 * u0 as i128);
        if !parallel {
            return Ok(Factorization::Entangled { qubit });
        }
        // u0, u1 coprime, so the division is exact
        let next: Vec<i64> = (0..h)
            .map(|c| if u0 != 0 { top[c] / u0 } else { bottom[c] / u1 })
            .collect();
        // |u|²·|next|² = 2^e with both integers, so |u|² is a power of two
        let norm_sq = (u0 as i128 * u0 as i128 + u1 as i128 * u1 as i128) as u128;
        if !norm_sq.is_power_of_two() || norm_sq.trailing_zeros() > e {
            return Err(StateError::NotNormalised(norm_sq as f64).into());
        }
        let a = norm_sq.trailing_zeros();
        factors.push(StateVector::from_exact(vec![u0, u1], a)?);
        e -= a;
        rest = next;
    }

    match (rest[0], e) {
        (w @ (1 | -1), 0) => Ok(Factorization::Product(ProductFactorization {
            factors,
            global_phase: Complex64::new(w as f64, 0.0),
        })),
        _ => Err(SeparabilityError::ZeroNormQuotient { qubit: n }),
    }
}

fn factor_complex(amps: Vec<Complex64>) -> Result<Factorization, SeparabilityError> {
    let n = amps.len().trailing_zeros() as usize;
    let mut rest = amps;
    let mut factors = Vec::with_capacity(n);

    for qubit in 0..n {
        let h = rest.len() / 2;
        let pivot = (0..rest.len())
            .max_by(|&x, &y| rest[x].norm_sqr().total_cmp(&rest[y].norm_sqr()))
            .unwrap_or(0);
        if math::abs(rest[pivot]) == 0.0 {
            return Err(SeparabilityError::ZeroNormQuotient { qubit });
        }
        let (row, col) = (pivot / h, pivot % h);
        let (top, bottom) = rest.split_at(h);
        let (u0, u1) = (top[col], bottom[col]);
        let (pivot_row, u_r) = if row == 0 { (top, u0) } else { (bottom, u1) };
        let w: Vec<Complex64> = pivot_row.iter().map(|&x| x / u_r).collect();
        let fits = (0..h).all(|c| {
            math::abs(top[c] - u0 * w[c]) <= RANK_TOLERANCE
                && math::abs(bottom[c] - u1 * w[c]) <= RANK_TOLERANCE
        });
        if !fits {
            return Ok(Factorization::Entangled { qubit });
        }
        let norm = math::sqrt(u0.norm_sqr() + u1.norm_sqr());
        let lead = if math::abs(u0) > RANK_TOLERANCE * norm {
            u0
        } else {
            u1
        };
        let phase = math::unit_phase(lead) * norm;
        factors.push(StateVector::from_amplitudes(vec![u0 / phase, u1 / phase])?);
        rest = w.into_iter().map(|x| x * phase).collect();
    }

    let w = rest[0];
    if (math::abs(w) - 1.0).abs() > 1e-9 {
        return Err(SeparabilityError::ZeroNormQuotient { qubit: n });
    }
    Ok(Factorization::Product(ProductFactorization {
        factors,
        global_phase: math::unit_phase(w),
    }))
}

/// Whether qubit `i` factors out of the rest of the state.
///
/// For sign vectors this is the block pattern: split the state into blocks
/// of size `2^{n-i}`; each block is `(x, σx)` with one common sign `σ`.
/// Other states compare every amplitude pair `(α_{…0…}, α_{…1…})` against a
/// pivot pair.
pub fn qubit_separable(s: &StateVector, i: usize) -> Result<bool, SeparabilityError> {
    let n = s.n();
    if i >= n {
        return Err(SeparabilityError::QubitOutOfRange { qubit: i, n });
    }
    let half = 1usize << (n - 1 - i);
    let pair_starts = move || {
        (0..1usize << n)
            .step_by(2 * half)
            .flat_map(move |b| b..b + half)
    };

    if s.representation() == Representation::ExactSign {
        let (c, _) = s.exact_coeffs().unwrap_or((&[], 0));
        let sigma = c[0] * c[half];
        return Ok(pair_starts().all(|j| c[j + half] == sigma * c[j]));
    }
    if let Some((c, _)) = s.exact_coeffs() {
        let Some(p) = pair_starts().find(|&j| c[j] != 0 || c[j + half] != 0) else {
            return Err(SeparabilityError::ZeroNormQuotient { qubit: i });
        };
        let (u0, u1) = (c[p] as i128, c[p + half] as i128);
        return Ok(pair_starts().all(|j| c[j] as i128 * u1 == c[j + half] as i128 * u0));
    }
    let a = s.amplitudes();
    let p = pair_starts()
        .max_by(|&x, &y| {
            let mx = a[x].norm_sqr() + a[x + half].norm_sqr();
            let my = a[y].norm_sqr() + a[y + half].norm_sqr();
            mx.total_cmp(&my)
        })
        .unwrap_or(0);
    let norm = math::sqrt(a[p].norm_sqr() + a[p + half].norm_sqr());
    if norm == 0.0 {
        return Err(SeparabilityError::ZeroNormQuotient { qubit: i });
    }
    let (u0, u1) = (a[p] / norm, a[p + half] / norm);
    Ok(pair_starts().all(|j| math::abs(a[j] * u1 - a[j + half] * u0) <= RANK_TOLERANCE))
}

fn validate_subset(n: usize, subset: &[usize]) -> Result<(), SeparabilityError> {
    if subset.is_empty() {
        return Err(SeparabilityError::EmptySubset);
    }
    let mut seen = vec![false; n];
    for &q in subset {
        if q >= n {
            return Err(SeparabilityError::QubitOutOfRange { qubit: q, n });
        }
        if core::mem::replace(&mut seen[q], true) {
            return Err(SeparabilityError::DuplicateQubit(q));
        }
    }
    if subset.len() == n {
        return Err(SeparabilityError::FullSubset);
    }
    Ok(())
}

/// Basis-index offsets for each value of the listed qubits, first listed
/// qubit most significant.
fn offsets(n: usize, qubits: &[usize]) -> Vec<usize> {
    (0..1usize << qubits.len())
        .map(|v| {
            qubits.iter().enumerate().fold(0usize, |acc, (pos, &q)| {
                let bit = (v >> (qubits.len() - 1 - pos)) & 1;
                acc | (bit << (n - 1 - q))
            })
        })
        .collect()
}

/// Whether the cut `subset | rest` is a product: the amplitude matrix with
/// rows indexed by `subset` and columns by the remaining qubits has rank 1.
pub fn bipartition_separable(s: &StateVector, subset: &[usize]) -> Result<bool, SeparabilityError> {
    let n = s.n();
    validate_subset(n, subset)?;
    let rest: Vec<usize> = (0..n).filter(|q| !subset.contains(q)).collect();
    let rows = offsets(n, subset);
    let cols = offsets(n, &rest);

    if let Some((c, _)) = s.exact_coeffs() {
        let at = |r: usize, k: usize| c[rows[r] | cols[k]] as i128;
        let Some((pr, pc)) = (0..rows.len())
            .flat_map(|r| (0..cols.len()).map(move |k| (r, k)))
            .find(|&(r, k)| at(r, k) != 0)
        else {
            return Err(SeparabilityError::ZeroNormQuotient { qubit: subset[0] });
        };
        let p = at(pr, pc);
        return Ok(
            (0..rows.len()).all(|r| (0..cols.len()).all(|k| at(r, k) * p == at(r, pc) * at(pr, k)))
        );
    }

    let a = s.amplitudes();
    let at = |r: usize, k: usize| a[rows[r] | cols[k]];
    let (pr, pc) = (0..rows.len())
        .flat_map(|r| (0..cols.len()).map(move |k| (r, k)))
        .max_by(|&(r1, k1), &(r2, k2)| at(r1, k1).norm_sqr().total_cmp(&at(r2, k2).norm_sqr()))
        .unwrap_or((0, 0));
    let p = at(pr, pc);
    if math::abs(p) == 0.0 {
        return Err(SeparabilityError::ZeroNormQuotient { qubit: subset[0] });
    }
    Ok((0..rows.len()).all(|r| {
        let ratio = at(r, pc) / p;
        (0..cols.len()).all(|k| math::abs(at(r, k) - ratio * at(pr, k)) <= RANK_TOLERANCE)
    }))
}

/// Separability structure of one state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntanglementScan {
    pub n: usize,
    /// Qubits that factor out individually.
    pub separable_qubits: Vec<usize>,
    /// Separable cuts, each named by the side containing qubit 0. `None`
    /// when the bipartition scan was skipped.
    pub separable_cuts: Option<Vec<Vec<usize>>>,
}

impl EntanglementScan {
    /// No single qubit is separable.
    pub fn no_separable_qubit(&self) -> bool {
        self.separable_qubits.is_empty()
    }

    /// No proper bipartition is separable; `None` when not scanned.
    pub fn no_separable_cut(&self) -> Option<bool> {
        self.separable_cuts.as_ref().map(|c| c.is_empty())
    }
}

/// Every proper bipartition, named by the side holding qubit 0:
/// `2^{n-1} - 1` cuts.
pub fn bipartitions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let others = n.saturating_sub(1);
    (0..(1usize << others).saturating_sub(1)).map(move |mask| {
        core::iter::once(0)
            .chain((1..n).filter(|q| mask & (1 << (q - 1)) != 0))
            .collect()
    })
}

/// Per-qubit scan, plus the bipartition scan when `n <= max_cut_qubits`.
pub fn entanglement_scan(
    s: &StateVector,
    max_cut_qubits: usize,
) -> Result<EntanglementScan, SeparabilityError> {
    let n = s.n();
    let mut separable_qubits = Vec::new();
    for q in 0..n {
        if qubit_separable(s, q)? {
            separable_qubits.push(q);
        }
    }
    let separable_cuts = if n >= 2 && n <= max_cut_qubits {
        let mut cuts = Vec::new();
        for cut in bipartitions(n) {
            if bipartition_separable(s, &cut)? {
                cuts.push(cut);
            }
        }
        Some(cuts)
    } else {
        None
    };
    Ok(EntanglementScan {
        n,
        separable_qubits,
        separable_cuts,
    })
}

/// `f(00) ⊕ f(11) = f(01) ⊕ f(10)` for a two-bit function.
pub fn n2_separability_condition(f: &BooleanFunction) -> Result<bool, SeparabilityError> {
    if f.n() != 2 {
        return Err(SeparabilityError::ArityMismatch {
            expected: 2,
            found: f.n(),
        });
    }
    Ok((f.eval(0b00) ^ f.eval(0b11)) == (f.eval(0b01) ^ f.eval(0b10)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{parse_truth_table, BooleanFunction};
    use crate::qstate::{equal_up_to_global_phase, tensor};

    fn signs(v: &[i8]) -> StateVector {
        StateVector::from_signs(v).unwrap()
    }

    fn tt(s: &str) -> BooleanFunction {
        parse_truth_table(s, None).unwrap()
    }

    #[test]
    fn ppi_examples() {
        let r = pair_product_invariant(&signs(&[1, 1, -1, -1])).unwrap();
        assert!(r.invariant && r.exact && r.decides_separability());
        assert_eq!(
            r.levels,
            [PairProductLevel::Consistent {
                k: 2,
                constant: Complex64::new(-0.25, 0.0)
            }]
        );

        let r = pair_product_invariant(&signs(&[1, 1, 1, -1, -1, -1, -1, 1])).unwrap();
        assert!(!r.invariant);
        assert_eq!(r.first_violation(), Some((2, 0, 1)));

        let r = pair_product_invariant(&signs(&[-1; 16])).unwrap();
        assert!(r.invariant);
        assert!(r.levels.iter().all(|l| *l
            == PairProductLevel::Consistent {
                k: l.k(),
                constant: Complex64::new(1.0 / 16.0, 0.0)
            }));

        assert!(matches!(
            pair_product_invariant(&signs(&[1, -1])),
            Err(SeparabilityError::TooFewQubits { .. })
        ));
    }

    #[test]
    fn ppi_flags_zero_amplitudes() {
        let s = StateVector::basis(2, 0).unwrap();
        let r = pair_product_invariant(&s).unwrap();
        assert_eq!(r.zero_amplitude, Some(1));
        assert!(!r.decides_separability());
    }

    #[test]
    fn factorisation_examples() {
        let Factorization::Product(p) = factor_product_state(&signs(&[1, -1, -1, 1])).unwrap()
        else {
            panic!("expected a product");
        };
        let minus = signs(&[1, -1]);
        assert_eq!(p.factors, [minus.clone(), minus]);
        assert_eq!(p.global_phase, Complex64::new(1.0, 0.0));

        let Factorization::Product(p) = factor_product_state(&signs(&[-1; 8])).unwrap() else {
            panic!("expected a product");
        };
        let plus = signs(&[1, 1]);
        assert_eq!(p.factors, [plus.clone(), plus.clone(), plus]);
        assert_eq!(p.global_phase, Complex64::new(-1.0, 0.0));
        assert_eq!(p.reconstruct().unwrap(), signs(&[-1; 8]));

        assert_eq!(
            factor_product_state(&tt("00011110").phase_state().unwrap()).unwrap(),
            Factorization::Entangled { qubit: 1 }
        );
    }

    #[test]
    fn factorisation_of_basis_and_complex_states() {
        let s = StateVector::basis(3, 0b101).unwrap();
        let Factorization::Product(p) = factor_product_state(&s).unwrap() else {
            panic!("expected a product");
        };
        assert_eq!(p.reconstruct().unwrap(), s);

        let q = |a: f64, b: f64, c: f64| {
            StateVector::qubit(Complex64::new(a, 0.0), Complex64::new(b, c)).unwrap()
        };
        let prod = tensor(
            &tensor(&q(1.0, 2.0, 0.5), &q(0.3, -1.0, 0.0)).unwrap(),
            &q(0.0, 1.0, 1.0),
        )
        .unwrap();
        let Factorization::Product(p) = factor_product_state(&prod).unwrap() else {
            panic!("expected a product");
        };
        assert!(equal_up_to_global_phase(&p.reconstruct().unwrap(), &prod, 1e-12).unwrap());
        assert!(p.fidelity(&prod).unwrap() > 1.0 - 1e-12);

        let bell = StateVector::normalized(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        assert_eq!(
            factor_product_state(&bell).unwrap(),
            Factorization::Entangled { qubit: 0 }
        );
    }

    #[test]
    fn exact_factor_of_dyadic_product() {
        // |0⟩ ⊗ |+⟩ ⊗ |−⟩: mixed zero and sign coefficients
        let s = StateVector::from_exact(vec![1, -1, 1, -1, 0, 0, 0, 0], 2).unwrap();
        let Factorization::Product(p) = factor_product_state(&s).unwrap() else {
            panic!("expected a product");
        };
        assert_eq!(p.factors[0], StateVector::basis(1, 0).unwrap());
        assert_eq!(p.factors[2].signs().unwrap(), [1, -1]);
        assert_eq!(p.reconstruct().unwrap(), s);
    }

    #[test]
    fn qubit_and_cut_tests() {
        let plus = signs(&[1, 1]);
        let bell = StateVector::normalized(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        let s = tensor(&plus, &bell).unwrap();
        assert!(qubit_separable(&s, 0).unwrap());
        assert!(!qubit_separable(&s, 1).unwrap());
        assert!(qubit_separable(&StateVector::basis(2, 0).unwrap(), 1).unwrap());
        assert!(!bipartition_separable(&bell, &[0]).unwrap());
        let mmm = signs(&[1, -1, -1, 1, -1, 1, 1, -1]);
        assert!(bipartition_separable(&mmm, &[0, 1]).unwrap());
        assert_eq!(
            bipartition_separable(&mmm, &[]),
            Err(SeparabilityError::EmptySubset)
        );
        assert_eq!(
            bipartition_separable(&mmm, &[0, 1, 2]),
            Err(SeparabilityError::FullSubset)
        );
        assert_eq!(
            bipartition_separable(&mmm, &[1, 1]),
            Err(SeparabilityError::DuplicateQubit(1))
        );
        assert!(matches!(
            qubit_separable(&mmm, 3),
            Err(SeparabilityError::QubitOutOfRange { .. })
        ));
    }

    #[test]
    fn bipartition_enumeration() {
        let cuts: Vec<_> = bipartitions(3).collect();
        assert_eq!(cuts, [vec![0], vec![0, 1], vec![0, 2]]);
        assert_eq!(bipartitions(4).count(), 7);
    }

    #[test]
    fn n2_condition() {
        assert!(n2_separability_condition(&tt("0110")).unwrap());
        assert!(n2_separability_condition(&tt("0011")).unwrap());
        assert!(!n2_separability_condition(&tt("0111")).unwrap());
        assert!(n2_separability_condition(&tt("01")).is_err());
    }
}
