//! Gamma-function machinery behind every fractional power rule.
//!
//! `gamma` uses the 13-term rational Lanczos approximation with
//! g = 6.024680040776729583740234375 (the coefficient set shipped in
//! CPython's `math.gamma`), plus exact factorials for small positive
//! integers and the reflection formula for negative arguments. Relative
//! error stays below 1e-13 on [-170, 170] away from poles.
//!
//! `rgamma` is the entire reciprocal: it is exactly zero at the poles, so
//! power-rule coefficients such as 1/Gamma(2 - 2b) vanish cleanly at b = 1.

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Absolute distance from a non-positive integer that counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Both arguments of [`gamma_ratio`] above this switch to log-space.
pub const LOG_RATIO_THRESHOLD: f64 = 20.0;

const LANCZOS_G: f64 = 6.024680040776729583740234375;
const LANCZOS_G_MINUS_HALF: f64 = 5.524680040776729583740234375;

const LANCZOS_NUM: [f64; 13] = [
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
];

// Coefficients of x (x+1) ... (x+11).
const LANCZOS_DEN: [f64; 13] = [
    0.0,
    39916800.0,
    120543840.0,
    150917976.0,
    105258076.0,
    45995730.0,
    13339535.0,
    2637558.0,
    357423.0,
    32670.0,
    1925.0,
    66.0,
    1.0,
];

/// Largest n for which (n-1)! is computed by direct product.
const MAX_EXACT_FACTORIAL_ARG: f64 = 171.0;

/// Whether `z` sits on a pole of Gamma (a non-positive integer) within
/// [`POLE_TOLERANCE`].
pub fn is_pole(z: f64) -> bool {
    z <= POLE_TOLERANCE && (z - z.round()).abs() <= POLE_TOLERANCE
}

fn lanczos_sum(x: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    // Evaluate in x for small arguments and in 1/x for large ones so the
    // rational function never overflows.
    if x < 5.0 {
        for i in (0..LANCZOS_NUM.len()).rev() {
            num = num * x + LANCZOS_NUM[i];
            den = den * x + LANCZOS_DEN[i];
        }
    } else {
        for i in 0..LANCZOS_NUM.len() {
            num = num / x + LANCZOS_NUM[i];
            den = den / x + LANCZOS_DEN[i];
        }
    }
    num / den
}

/// sin(pi x) with exact argument reduction.
fn sin_pi(x: f64) -> f64 {
    let y = x.abs() % 2.0;
    let n = (2.0 * y).round() as i32;
    let r = match n {
        0 => (PI * y).sin(),
        1 => (PI * (y - 0.5)).cos(),
        2 => (PI * (1.0 - y)).sin(),
        3 => -(PI * (y - 1.5)).cos(),
        _ => (PI * (y - 2.0)).sin(),
    };
    // sin is odd; reuse the sign of x
    (1.0f64).copysign(x) * r
}

/// Gamma(z) for real `z`.
///
/// Fails with [`Error::GammaPole`] when `z` is within [`POLE_TOLERANCE`] of a
/// non-positive integer. Overflows to infinity above z ~ 171.6.
pub fn gamma(z: f64) -> Result<f64> {
    if z.is_nan() {
        return Ok(f64::NAN);
    }
    if is_pole(z) {
        return Err(Error::GammaPole(z));
    }
    if z == z.floor() && z > 0.0 && z <= MAX_EXACT_FACTORIAL_ARG {
        let n = z as u32;
        return Ok((2..n).fold(1.0, |acc, k| acc * k as f64));
    }

    let absx = z.abs();
    if absx < 1e-20 {
        return Ok(1.0 / z);
    }

    let y = absx + LANCZOS_G_MINUS_HALF;
    // rounding error committed when forming y, fed back as a first-order correction
    let q;
    let mut corr;
    if absx > LANCZOS_G_MINUS_HALF {
        q = y - absx;
        corr = q - LANCZOS_G_MINUS_HALF;
    } else {
        q = y - LANCZOS_G_MINUS_HALF;
        corr = q - absx;
    }
    corr = corr * LANCZOS_G / y;

    let r = if z < 0.0 {
        let mut r = -PI / sin_pi(absx) / absx * y.exp() / lanczos_sum(absx);
        r -= corr * r;
        if absx < 140.0 {
            r /= y.powf(absx - 0.5);
        } else {
            let sqrtpow = y.powf(absx / 2.0 - 0.25);
            r /= sqrtpow;
            r /= sqrtpow;
        }
        r
    } else {
        let mut r = lanczos_sum(absx) / y.exp();
        r += corr * r;
        if absx < 140.0 {
            r *= y.powf(absx - 0.5);
        } else {
            let sqrtpow = y.powf(absx / 2.0 - 0.25);
            r *= sqrtpow;
            r *= sqrtpow;
        }
        r
    };
    Ok(r)
}

/// 1/Gamma(z); exactly `0.0` on the poles.
pub fn rgamma(z: f64) -> f64 {
    if is_pole(z) {
        return 0.0;
    }
    match gamma(z) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// ln Gamma(x) for x > 0. Only accurate in the relative sense for
/// arguments well away from 1 and 2.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut r = lanczos_sum(x).ln() - LANCZOS_G;
    r += (x - 0.5) * ((x + LANCZOS_G - 0.5).ln() - 1.0);
    r
}

/// Gamma(num) / Gamma(den), the coefficient shape of the fractional power
/// rules.
///
/// Zero when `den` is a pole and `num` is not; an error when `num` is a pole.
/// Switches to log-space when both arguments exceed
/// [`LOG_RATIO_THRESHOLD`].
pub fn gamma_ratio(num: f64, den: f64) -> Result<f64> {
    if is_pole(num) {
        return Err(Error::GammaPole(num));
    }
    if is_pole(den) {
        return Ok(0.0);
    }
    if num > LOG_RATIO_THRESHOLD && den > LOG_RATIO_THRESHOLD {
        return Ok((ln_gamma(num) - ln_gamma(den)).exp());
    }
    Ok(gamma(num)? * rgamma(den))
}
