//! Float helpers routed through `libm` so the crate builds without `std`.

use num_complex::Complex64;

pub(crate) const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn abs(c: Complex64) -> f64 {
    libm::hypot(c.re, c.im)
}

/// `x * 2^exp`, exact whenever the result is a normal float.
#[inline]
pub(crate) fn ldexp(x: f64, exp: i32) -> f64 {
    libm::scalbn(x, exp)
}

/// `2^{-half_exp / 2}`.
pub(crate) fn inv_sqrt2_pow(half_exp: u32) -> f64 {
    let base = ldexp(1.0, -((half_exp / 2) as i32));
    if half_exp % 2 == 1 {
        base * FRAC_1_SQRT_2
    } else {
        base
    }
}

/// Unit-modulus phase of `c`, or `1` when `c` is zero.
pub(crate) fn unit_phase(c: Complex64) -> Complex64 {
    let m = abs(c);
    if m == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        c / m
    }
}

pub(crate) fn expi(theta: f64) -> Complex64 {
    Complex64::new(cos(theta), sin(theta))
}

/// `x` reduced to `[0, period)`.
pub(crate) fn wrap(x: f64, period: f64) -> f64 {
    let r = x - period * libm::floor(x / period);
    if r >= period {
        0.0
    } else {
        r
    }
}
