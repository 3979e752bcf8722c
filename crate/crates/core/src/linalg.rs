//! Dense 2×2 complex matrices acting on single qubits and Jones vectors.

use core::ops::Mul;

use num_complex::Complex64;
use rand_core::RngCore;

use crate::math;
use crate::qstate::gaussian_pair;

/// A pair of complex amplitudes `(α, β)` for one two-level system.
pub type Amp2 = [Complex64; 2];

/// Row-major 2×2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

    /// `[[a, b], [c, d]]`.
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Mat2::new(a, ZERO, ZERO, d)
    }

    /// The single-qubit Hadamard gate.
    pub fn hadamard() -> Self {
        let h = math::FRAC_1_SQRT_2;
        Mat2::real(h, h, h, -h)
    }

    /// Anticlockwise rotation of the xy-plane by `phi` radians.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = (math::sin(phi), math::cos(phi));
        Mat2::real(c, -s, s, c)
    }

    /// Row-major entries interleaved as `re, im` pairs: eight reals.
    pub fn from_interleaved(v: [f64; 8]) -> Self {
        Mat2([
            [Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])],
            [Complex64::new(v[4], v[5]), Complex64::new(v[6], v[7])],
        ])
    }

    pub fn to_interleaved(&self) -> [f64; 8] {
        let m = &self.0;
        [
            m[0][0].re, m[0][0].im, m[0][1].re, m[0][1].im, m[1][0].re, m[1][0].im, m[1][1].re,
            m[1][1].im,
        ]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0] * c, m[0][1] * c, m[1][0] * c, m[1][1] * c)
    }

    pub fn apply(&self, v: Amp2) -> Amp2 {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.0.iter().flatten().map(|c| c.norm_sqr()).sum()
    }

    /// `‖U†U − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.adjoint() * *self;
        let d = Mat2::new(p.0[0][0] - ONE, p.0[0][1], p.0[1][0], p.0[1][1] - ONE);
        math::sqrt(d.frobenius_norm_sqr())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() < tol
    }

    /// Haar-random element of SU(2): a normalised Gaussian quaternion.
    pub fn random_su2<R: RngCore>(rng: &mut R) -> Self {
        loop {
            let (a, b) = gaussian_pair(rng);
            let (c, d) = gaussian_pair(rng);
            let norm = math::sqrt(a * a + b * b + c * c + d * d);
            if norm > 1e-6 {
                let alpha = Complex64::new(a, b) / norm;
                let beta = Complex64::new(c, d) / norm;
                return Mat2::new(alpha, -beta.conj(), beta, alpha.conj());
            }
        }
    }

    /// Haar-random element of U(2).
    pub fn random_unitary<R: RngCore>(rng: &mut R) -> Self {
        let (a, b) = gaussian_pair(rng);
        let phase = math::unit_phase(Complex64::new(a, b));
        Mat2::random_su2(rng).scale(phase)
    }

    /// Rescales a unitary by a phase so that its determinant is 1.
    pub fn to_special_unitary(&self) -> Self {
        let d = self.det();
        // principal square root of the determinant phase
        let half = libm::atan2(d.im, d.re) / 2.0;
        self.scale(math::expi(-half))
    }

    /// `min_λ ‖self − λ·other‖_F` over unit-modulus `λ`, with the optimal `λ`.
    ///
    /// The residual is summed entrywise after alignment so it keeps full
    /// precision near zero.
    pub fn phase_aligned_distance(&self, other: &Mat2) -> (f64, Complex64) {
        let overlap: Complex64 = self
            .0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| b.conj() * a)
            .sum();
        let lambda = math::unit_phase(overlap);
        let sq: f64 = self
            .0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - lambda * b).norm_sqr())
            .sum();
        (math::sqrt(sq), lambda)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(out)
    }
}
