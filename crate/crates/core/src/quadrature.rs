//! Adaptive Gauss-Kronrod quadrature and a direct numerical evaluation of the
//! Caputo derivative of a power function, used to check the term-wise power
//! rule in [`crate::series`] against the defining integral.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::specialfn::gamma;

// 15-point Kronrod abscissae on [0, 1] (symmetric), QUADPACK qk15.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// 7-point Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_DEPTH: u32 = 40;

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += wk * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> (f64, f64) {
    let (value, err) = kronrod15(f, a, b);
    if err <= tol || depth == 0 {
        return (value, err);
    }
    let mid = 0.5 * (a + b);
    let (v1, e1) = adapt(f, a, mid, 0.5 * tol, depth - 1);
    let (v2, e2) = adapt(f, mid, b, 0.5 * tol, depth - 1);
    (v1 + v2, e1 + e2)
}

/// Integrates `f` over `[a, b]` by recursive bisection until the
/// Kronrod/Gauss difference is below `abs_tol`. Returns `(value, error
/// estimate)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<(f64, f64)> {
    let (value, err) = adapt(&f, a, b, abs_tol, MAX_DEPTH);
    if !value.is_finite() || err > abs_tol {
        return Err(Error::Quadrature { estimate: err });
    }
    Ok((value, err))
}

/// Absolute accuracy targeted by [`caputo_quadrature_oracle`].
pub const ORACLE_TOLERANCE: f64 = 1e-10;

/// Caputo derivative of `f(t) = t^p` at `x`, obtained by quadrature of
///
/// ```text
/// 1/Gamma(1-a) * integral_0^x (x-t)^(-a) * p * t^(p-1) dt
/// ```
///
/// Both endpoint singularities are removed by substitution: `w = t^p` on
/// `[0, x/2]` and `v = (x-t)^(1-a)` on `[x/2, x]`.
// negated comparisons also reject NaN
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn caputo_quadrature_oracle(p: f64, order: f64, x: f64) -> Result<f64> {
    if !(order > 0.0 && order < 1.0) {
        return Err(Error::OrderOutOfRange {
            order,
            range: "(0, 1)",
        });
    }
    if !(p > 0.0) {
        return Err(Error::Domain {
            base: 0.0,
            exponent: p - 1.0,
        });
    }
    if !(x > 0.0) {
        return Err(Error::Domain { base: x, exponent: p });
    }

    let mid = 0.5 * x;
    let tol = 0.25 * ORACLE_TOLERANCE;

    // p t^(p-1) dt = dw
    let left = |w: f64| (x - w.powf(1.0 / p)).powf(-order);
    let (left_val, _) = integrate(left, 0.0, mid.powf(p), tol)?;

    // (x-t)^(-a) dt = -dv / (1-a)
    let s = 1.0 - order;
    let right = |v: f64| {
        let t = x - v.powf(1.0 / s);
        p * t.powf(p - 1.0)
    };
    let (right_val, _) = integrate(right, 0.0, (x - mid).powf(s), tol)?;

    Ok((left_val + right_val / s) / gamma(1.0 - order)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let (v, _) = integrate(|x| 3.0 * x * x, 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 8.0).abs() < 1e-13);
    }

    #[test]
    fn derivative_singularity_at_endpoint() {
        let (v, _) = integrate(|x: f64| x.sqrt(), 0.0, 1.0, 1e-11).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn reports_non_convergence() {
        let r = integrate(|x: f64| 1.0 / x, 0.0, 1.0, 1e-10);
        assert!(matches!(r, Err(Error::Quadrature { .. })));
    }

    #[test]
    fn oracle_examples() {
        let v = caputo_quadrature_oracle(1.0, 0.5, 1.0).unwrap();
        assert!((v - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-10);
        let v = caputo_quadrature_oracle(2.0, 0.5, 1.0).unwrap();
        assert!((v - 1.5045055561273502).abs() < 1e-10);
    }

    #[test]
    fn oracle_rejects_bad_input() {
        assert!(caputo_quadrature_oracle(1.0, 1.0, 1.0).is_err());
        assert!(caputo_quadrature_oracle(0.0, 0.5, 1.0).is_err());
        assert!(caputo_quadrature_oracle(1.0, 0.5, 0.0).is_err());
    }
}
