//! Jones-calculus model of single-photon polarisation optics.
//!
//! x-polarisation is logical 0 and y-polarisation logical 1. A wave plate
//! with fast axis at angle `θ` acts as `R(θ)·diag(1, r)·R(−θ)` with
//! `r = i` (quarter) or `r = −1` (half). Every black-box is realised as a
//! quarter/half/quarter plate stack found by [`decompose_su2`].

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_4, PI};
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{Amp2, Mat2};
use crate::math;
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::oracle::BooleanFunction;
use crate::qstate::{MeasurementDistribution, StateError};
use crate::solver::{
    extract_product_oracle, ProductOracle, SolveResult, SolverError, Verdict, DECISION_TOLERANCE,
};

/// Allowed `| ‖v‖² − 1 |` for a Jones vector.
pub const JONES_NORM_TOLERANCE: f64 = 1e-12;
/// Input to [`decompose_su2`] must be unitary with determinant 1 to this.
pub const SU2_INPUT_TOLERANCE: f64 = 1e-10;
/// Largest accepted phase-aligned Frobenius residual of a decomposition.
pub const SU2_RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Grid points per angle for the multi-start search.
const GRID: usize = 8;
/// Nelder-Mead runs launched from the best grid points.
const MAX_STARTS: usize = 24;
/// A start is good enough to stop searching below this residual.
const EARLY_EXIT_RESIDUAL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OpticalError {
    #[error("Jones vector has squared norm {0}, expected 1")]
    NotNormalised(f64),
    #[error("matrix is not unitary (defect {0:e})")]
    NotUnitary(f64),
    #[error("matrix determinant {re}+{im}i is not 1")]
    NotSpecial { re: f64, im: f64 },
    #[error("best plate sequence leaves residual {0:e}, above {SU2_RESIDUAL_TOLERANCE:e}")]
    NoConvergence(f64),
    #[error("optical protocol needs arity {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    State(#[from] StateError),
}

/// Polarisation state `(E_x, E_y)` of one photon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesVector {
    e: Amp2,
}

impl JonesVector {
    pub fn new(ex: Complex64, ey: Complex64) -> Result<Self, OpticalError> {
        let norm = ex.norm_sqr() + ey.norm_sqr();
        if !((norm - 1.0).abs() <= JONES_NORM_TOLERANCE) {
            return Err(OpticalError::NotNormalised(norm));
        }
        Ok(JonesVector { e: [ex, ey] })
    }

    pub fn x_pol() -> Self {
        JonesVector {
            e: [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        }
    }

    pub fn y_pol() -> Self {
        JonesVector {
            e: [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }

    pub fn components(&self) -> Amp2 {
        self.e
    }

    /// Passes the photon through a lossless element.
    pub fn through(&self, element: &Mat2) -> JonesVector {
        JonesVector {
            e: element.apply(self.e),
        }
    }

    pub fn probability_x(&self) -> f64 {
        self.e[0].norm_sqr()
    }

    pub fn probability_y(&self) -> f64 {
        self.e[1].norm_sqr()
    }

    /// Outcome 0 for x, 1 for y; renormalised against rounding drift.
    pub fn distribution(&self) -> MeasurementDistribution {
        let (px, py) = (self.probability_x(), self.probability_y());
        let total = px + py;
        MeasurementDistribution::new(alloc::vec![px / total, py / total])
            .expect("two non-negative weights normalised to 1")
    }
}

/// Anticlockwise rotation of the polarisation by `phi`.
pub fn rotate_polarisation(v: &JonesVector, phi: f64) -> JonesVector {
    v.through(&Mat2::rotation(phi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlateKind {
    Quarter,
    Half,
}

impl PlateKind {
    /// Phase of the slow axis relative to the fast one.
    fn retardance(self) -> Complex64 {
        match self {
            PlateKind::Quarter => Complex64::new(0.0, 1.0),
            PlateKind::Half => Complex64::new(-1.0, 0.0),
        }
    }
}

/// A wave plate with its fast axis at `angle` radians, kept in `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePlate {
    kind: PlateKind,
    angle: f64,
}

impl WavePlate {
    pub fn new(kind: PlateKind, angle: f64) -> Self {
        WavePlate {
            kind,
            angle: math::wrap(angle, PI),
        }
    }

    pub fn quarter(angle: f64) -> Self {
        WavePlate::new(PlateKind::Quarter, angle)
    }

    pub fn half(angle: f64) -> Self {
        WavePlate::new(PlateKind::Half, angle)
    }

    pub fn kind(&self) -> PlateKind {
        self.kind
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn matrix(&self) -> Mat2 {
        waveplate_matrix(self)
    }
}

impl fmt::Display for WavePlate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            PlateKind::Quarter => "QWP",
            PlateKind::Half => "HWP",
        };
        write!(f, "{name}@{:.6}", self.angle)
    }
}

/// `R(θ)·diag(1, r)·R(−θ)`.
pub fn waveplate_matrix(p: &WavePlate) -> Mat2 {
    let (c, s) = (math::cos(p.angle), math::sin(p.angle));
    let r = p.kind.retardance();
    let one = Complex64::new(1.0, 0.0);
    // expanded product; the off-diagonal entries are equal
    let off = (one - r) * (c * s);
    Mat2::new(
        one * (c * c) + r * (s * s),
        off,
        off,
        one * (s * s) + r * (c * c),
    )
}

fn stack_matrix(angles: &[f64; 3]) -> Mat2 {
    waveplate_matrix(&WavePlate::quarter(angles[0]))
        * waveplate_matrix(&WavePlate::half(angles[1]))
        * waveplate_matrix(&WavePlate::quarter(angles[2]))
}

/// Plate angles `(θ₁, θ₂, θ₃)` for `QWP(θ₁)·HWP(θ₂)·QWP(θ₃)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2Decomposition {
    pub angles: [f64; 3],
    /// Phase-aligned Frobenius distance to the target.
    pub residual: f64,
    /// `λ` with `target ≈ λ·matrix()`.
    pub global_phase: Complex64,
}

impl Su2Decomposition {
    pub fn plates(&self) -> [WavePlate; 3] {
        [
            WavePlate::quarter(self.angles[0]),
            WavePlate::half(self.angles[1]),
            WavePlate::quarter(self.angles[2]),
        ]
    }

    pub fn matrix(&self) -> Mat2 {
        stack_matrix(&self.angles)
    }
}

/// Finds quarter/half/quarter plate angles reproducing a special unitary up
/// to global phase.
///
/// Nelder-Mead on the squared phase-aligned residual, started from the
/// best points of an `8³` grid over `[0, π)³`. Plate matrices have period
/// `π` in their angle, so the search runs unbounded and wraps at the end.
pub fn decompose_su2(u: &Mat2) -> Result<Su2Decomposition, OpticalError> {
    let defect = u.unitarity_defect();
    if !(defect < SU2_INPUT_TOLERANCE) {
        return Err(OpticalError::NotUnitary(defect));
    }
    let det = u.det();
    if !(math::abs(det - 1.0) < SU2_INPUT_TOLERANCE) {
        return Err(OpticalError::NotSpecial {
            re: det.re,
            im: det.im,
        });
    }

    let objective = |a: &[f64; 3]| {
        let d = u.phase_aligned_distance(&stack_matrix(a)).0;
        d * d
    };
    let step = PI / GRID as f64;
    let mut starts: Vec<([f64; 3], f64)> = (0..GRID * GRID * GRID)
        .map(|k| {
            let a = [
                (k / (GRID * GRID)) as f64 * step,
                (k / GRID % GRID) as f64 * step,
                (k % GRID) as f64 * step,
            ];
            (a, objective(&a))
        })
        .collect();
    starts.sort_by(|a, b| a.1.total_cmp(&b.1));

    let opts = NelderMeadOptions {
        max_iterations: 4000,
        target: EARLY_EXIT_RESIDUAL * EARLY_EXIT_RESIDUAL,
        x_tolerance: 1e-15,
    };
    let mut best: Option<([f64; 3], f64)> = None;
    for (start, _) in starts.iter().take(MAX_STARTS) {
        let m = nelder_mead(objective, *start, step / 2.0, opts);
        let residual = math::sqrt(m.value.max(0.0));
        if best.is_none_or(|(_, r)| residual < r) {
            best = Some((m.point, residual));
        }
        if residual < EARLY_EXIT_RESIDUAL {
            break;
        }
    }
    let (point, _) = best.expect("at least one start");
    let angles = point.map(|a| math::wrap(a, PI));
    let (residual, global_phase) = u.phase_aligned_distance(&stack_matrix(&angles));
    if !(residual < SU2_RESIDUAL_TOLERANCE) {
        return Err(OpticalError::NoConvergence(residual));
    }
    Ok(Su2Decomposition {
        angles,
        residual,
        global_phase,
    })
}

/// A black-box built from one plate stack per photon. Every pass of the
/// photons through it counts as one query.
#[derive(Debug)]
pub struct OpticalBlackBox {
    stacks: Vec<Su2Decomposition>,
    queries: AtomicU64,
}

impl OpticalBlackBox {
    /// Realises each unitary, up to global phase, as a plate stack.
    pub fn from_unitaries(gates: &[Mat2]) -> Result<Self, OpticalError> {
        let stacks = gates
            .iter()
            .map(|g| {
                let defect = g.unitarity_defect();
                if !(defect < SU2_INPUT_TOLERANCE) {
                    return Err(OpticalError::NotUnitary(defect));
                }
                decompose_su2(&g.to_special_unitary())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OpticalBlackBox {
            stacks,
            queries: AtomicU64::new(0),
        })
    }

    pub fn stacks(&self) -> &[Su2Decomposition] {
        &self.stacks
    }

    pub fn pass(&self, photons: &mut [JonesVector]) -> Result<(), OpticalError> {
        if photons.len() != self.stacks.len() {
            return Err(OpticalError::ArityMismatch {
                expected: self.stacks.len(),
                found: photons.len(),
            });
        }
        self.queries.fetch_add(1, Ordering::Relaxed);
        for (p, stack) in photons.iter_mut().zip(&self.stacks) {
            for plate in stack.plates().iter().rev() {
                *p = p.through(&plate.matrix());
            }
        }
        Ok(())
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }
}

fn verdict_from_all_x(f: &BooleanFunction, p_all_x: f64) -> Result<Verdict, OpticalError> {
    if p_all_x > 1.0 - DECISION_TOLERANCE {
        Ok(Verdict::Constant)
    } else if p_all_x < DECISION_TOLERANCE {
        Ok(Verdict::Balanced)
    } else {
        Err(SolverError::PromiseViolated {
            ones: f.ones(),
            len: f.len(),
            zero_probability: Some(p_all_x),
        }
        .into())
    }
}

fn describe(stack: &Su2Decomposition) -> alloc::string::String {
    let [a, b, c] = stack.plates();
    format!("{a} {b} {c} (residual {:.1e})", stack.residual)
}

/// Deutsch's problem with one photon.
///
/// Prepare y-polarisation, rotate by π/4, pass the plates realising
/// `diag((-1)^{f(0)}, (-1)^{f(1)})`, rotate by π/4 and measure. The photon
/// leaves x-polarised exactly when `f` is constant.
pub fn optical_deutsch(f: &BooleanFunction) -> Result<SolveResult, OpticalError> {
    if f.n() != 1 {
        return Err(OpticalError::ArityMismatch {
            expected: 1,
            found: f.n(),
        });
    }
    let sign = |b: bool| Complex64::new(if b { -1.0 } else { 1.0 }, 0.0);
    let black_box =
        OpticalBlackBox::from_unitaries(&[Mat2::diag(sign(f.eval(0)), sign(f.eval(1)))])?;
    let mut photon = [rotate_polarisation(&JonesVector::y_pol(), FRAC_PI_4)];
    black_box.pass(&mut photon)?;
    let out = rotate_polarisation(&photon[0], FRAC_PI_4);
    let distribution = out.distribution();
    let verdict = verdict_from_all_x(f, distribution.probability(0))?;
    Ok(SolveResult {
        verdict,
        identified_function: None,
        oracle_calls: black_box.queries(),
        trace: alloc::vec![
            format!("prepare y-pol, rotate pi/4"),
            format!("black-box plates {}", describe(&black_box.stacks()[0])),
            format!("rotate pi/4, P(y) = {}", out.probability_y()),
        ],
        distribution: Some(distribution),
    })
}

/// The `n = 2` problem with two photons that never interact.
///
/// Each photon starts x-polarised, is rotated by π/4 to the diagonal
/// state, passes its own plate stack for one factor of the product oracle,
/// is rotated back by −π/4 and measured. Constant iff both leave
/// x-polarised.
pub fn optical_dj2(f: &BooleanFunction) -> Result<SolveResult, OpticalError> {
    if f.n() != 2 {
        return Err(OpticalError::ArityMismatch {
            expected: 2,
            found: f.n(),
        });
    }
    let factors = match extract_product_oracle(f)? {
        ProductOracle::Separable(o) => o,
        ProductOracle::Entangled { qubit } => {
            return Err(SolverError::Entangled { qubit }.into());
        }
    };
    let black_box = OpticalBlackBox::from_unitaries(factors.factors())?;
    let diagonal = rotate_polarisation(&JonesVector::x_pol(), FRAC_PI_4);
    let mut photons = [diagonal, diagonal];
    black_box.pass(&mut photons)?;
    let out = photons.map(|p| rotate_polarisation(&p, -FRAC_PI_4));
    let distribution = out[0].distribution().product(&out[1].distribution());
    let verdict = verdict_from_all_x(f, distribution.probability(0))?;
    Ok(SolveResult {
        verdict,
        identified_function: None,
        oracle_calls: black_box.queries(),
        trace: alloc::vec![
            format!("prepare two x-pol photons, rotate pi/4"),
            format!("photon 0 plates {}", describe(&black_box.stacks()[0])),
            format!("photon 1 plates {}", describe(&black_box.stacks()[1])),
            format!(
                "rotate -pi/4, P(y) = ({}, {})",
                out[0].probability_y(),
                out[1].probability_y()
            ),
        ],
        distribution: Some(distribution),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::parse_truth_table;
    use crate::solver::solve_dj_quantum;

    fn tt(s: &str) -> BooleanFunction {
        parse_truth_table(s, None).unwrap()
    }

    fn close(a: &Mat2, b: &Mat2, tol: f64) -> bool {
        (0..2).all(|r| (0..2).all(|c| math::abs(a.0[r][c] - b.0[r][c]) < tol))
    }

    #[test]
    fn plate_examples() {
        let c = Complex64::new;
        assert!(close(
            &waveplate_matrix(&WavePlate::half(0.0)),
            &Mat2::diag(c(1.0, 0.0), c(-1.0, 0.0)),
            1e-15
        ));
        assert!(close(
            &waveplate_matrix(&WavePlate::quarter(0.0)),
            &Mat2::diag(c(1.0, 0.0), c(0.0, 1.0)),
            1e-15
        ));
        let swap = Mat2::real(0.0, 1.0, 1.0, 0.0);
        let (d, _) = waveplate_matrix(&WavePlate::half(FRAC_PI_4)).phase_aligned_distance(&swap);
        assert!(d < 1e-15);
    }

    #[test]
    fn angles_are_wrapped() {
        assert_eq!(WavePlate::half(PI).angle(), 0.0);
        assert!((WavePlate::quarter(-0.5).angle() - (PI - 0.5)).abs() < 1e-15);
        let a = WavePlate::quarter(0.3 + PI).matrix();
        assert!(close(&a, &WavePlate::quarter(0.3).matrix(), 1e-14));
    }

    #[test]
    fn rotations() {
        let h = math::FRAC_1_SQRT_2;
        let v = rotate_polarisation(&JonesVector::y_pol(), FRAC_PI_4).components();
        assert!((v[0].re + h).abs() < 1e-15 && (v[1].re - h).abs() < 1e-15);
        let w = rotate_polarisation(&JonesVector::x_pol(), PI / 2.0);
        assert!((w.probability_y() - 1.0).abs() < 1e-15);
        let u = JonesVector::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap();
        assert_eq!(rotate_polarisation(&u, 0.0), u);
        assert!(JonesVector::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn decompositions() {
        for u in [
            Mat2::IDENTITY,
            Mat2::diag(math::expi(-FRAC_PI_4), math::expi(FRAC_PI_4)),
            Mat2::hadamard().to_special_unitary(),
        ] {
            let d = decompose_su2(&u).unwrap();
            assert!(d.residual < SU2_RESIDUAL_TOLERANCE, "{d:?}");
            assert!(d.angles.iter().all(|a| (0.0..PI).contains(a)));
        }
        assert!(matches!(
            decompose_su2(&Mat2::real(1.0, 1.0, 0.0, 1.0)),
            Err(OpticalError::NotUnitary(_))
        ));
        assert!(matches!(
            decompose_su2(&Mat2::real(1.0, 0.0, 0.0, -1.0)),
            Err(OpticalError::NotSpecial { .. })
        ));
    }

    #[test]
    fn deutsch_matches_quantum() {
        for t in ["00", "01", "10", "11"] {
            let f = tt(t);
            let o = optical_deutsch(&f).unwrap();
            let q = solve_dj_quantum(&f).unwrap();
            assert_eq!(o.verdict, q.verdict, "{t}");
            assert_eq!(o.oracle_calls, 1);
            let p = o.distribution.unwrap();
            assert!(p.probability(0) > 1.0 - 1e-9 || p.probability(1) > 1.0 - 1e-9);
        }
        assert_eq!(
            optical_deutsch(&tt("00")).unwrap().verdict,
            Verdict::Constant
        );
        assert_eq!(
            optical_deutsch(&tt("01")).unwrap().verdict,
            Verdict::Balanced
        );
    }

    #[test]
    fn dj2_matches_quantum() {
        for t in [
            "0000", "1111", "0011", "1100", "0101", "1010", "0110", "1001",
        ] {
            let f = tt(t);
            let o = optical_dj2(&f).unwrap();
            let q = solve_dj_quantum(&f).unwrap();
            assert_eq!(o.verdict, q.verdict, "{t}");
            assert_eq!(o.oracle_calls, 1);
        }
        assert!(matches!(
            optical_dj2(&tt("0111")),
            Err(OpticalError::Solver(SolverError::PromiseViolated { .. }))
        ));
        assert!(matches!(
            optical_dj2(&tt("01")),
            Err(OpticalError::ArityMismatch { .. })
        ));
    }
}
