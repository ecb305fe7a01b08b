//! Finite generalized power series in two variables.
//!
//! A [`FracSeries`] is a sum of monomials `c * x^p * y^q` with real
//! exponents. It carries every quantity the decomposition method touches:
//! initial data, forcing, solution components, Adomian polynomials and
//! partial sums. Fractional operators act term by term through the power
//! rules
//!
//! ```text
//! D^a  t^p = Gamma(p+1) / Gamma(p+1-a) * t^(p-a)   (Caputo, constants -> 0)
//! J^a  t^q = Gamma(q+1) / Gamma(q+1+a) * t^(q+a)   (Riemann-Liouville)
//! ```
//!
//! For a negative exponent the Caputo rule is applied formally; the defining
//! integral does not converge there, but the decomposition feeds such terms
//! back through `D_x` and needs a value for them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::numfmt::{format_sig, ROUND_TRIP_DIGITS};
use crate::specialfn::gamma_ratio;

/// Exponents closer than this are the same monomial.
pub const EXPONENT_TOLERANCE: f64 = 1e-12;

/// Terms with `|c| <= DROP_THRESHOLD * max(1, max |c|)` are discarded.
pub const DROP_THRESHOLD: f64 = 1e-15;

/// Default bound on the number of raw terms a product may create.
pub const DEFAULT_TERM_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => f.write_str("x"),
            Axis::Y => f.write_str("y"),
        }
    }
}

/// One monomial `coeff * x^px * y^py`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracTerm {
    pub coeff: f64,
    pub px: f64,
    pub py: f64,
}

impl FracTerm {
    pub fn new(coeff: f64, px: f64, py: f64) -> Self {
        FracTerm { coeff, px, py }
    }

    pub fn exponent(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.px,
            Axis::Y => self.py,
        }
    }

    fn with_exponent(mut self, axis: Axis, e: f64) -> Self {
        match axis {
            Axis::X => self.px = e,
            Axis::Y => self.py = e,
        }
        self
    }

    fn cmp_exponents(&self, other: &Self) -> Ordering {
        self.px
            .total_cmp(&other.px)
            .then_with(|| self.py.total_cmp(&other.py))
    }
}

/// Snaps an exponent onto the nearest integer when it is within tolerance,
/// so that `1 - 2 * 0.5` style arithmetic lands exactly on 0.
fn snap(e: f64) -> f64 {
    let r = e.round();
    if (e - r).abs() <= EXPONENT_TOLERANCE {
        r
    } else {
        e
    }
}

/// A normalized finite sum of [`FracTerm`]s, sorted by `(px, py)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FracSeries {
    terms: Vec<FracTerm>,
}

impl FracSeries {
    pub fn zero() -> Self {
        FracSeries { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(c, 0.0, 0.0)
    }

    pub fn monomial(coeff: f64, px: f64, py: f64) -> Self {
        Self::from_terms(vec![FracTerm::new(coeff, px, py)])
    }

    /// Builds a series from arbitrary terms, merging duplicates and dropping
    /// negligible coefficients.
    pub fn from_terms<I: IntoIterator<Item = FracTerm>>(terms: I) -> Self {
        FracSeries {
            terms: normalize_terms(terms.into_iter().collect()),
        }
    }

    pub fn terms(&self) -> &[FracTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-runs normalization. Series built through this module are already
    /// normalized, so this is the identity on them.
    pub fn normalize(&self) -> Self {
        Self::from_terms(self.terms.iter().copied())
    }

    /// True when no term depends on `axis`.
    pub fn is_constant_in(&self, axis: Axis) -> bool {
        self.terms.iter().all(|t| t.exponent(axis) == 0.0)
    }

    pub fn min_exponent(&self, axis: Axis) -> Option<f64> {
        self.terms
            .iter()
            .map(|t| t.exponent(axis))
            .min_by(|a, b| a.total_cmp(b))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).copied())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_terms(self.terms.iter().map(|t| FracTerm {
            coeff: t.coeff * c,
            ..*t
        }))
    }

    /// Cauchy product under [`DEFAULT_TERM_CAP`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_capped(other, DEFAULT_TERM_CAP)
    }

    pub fn mul_capped(&self, other: &Self, cap: usize) -> Result<Self> {
        let size = self.len() * other.len();
        if size > cap {
            return Err(Error::TermCapExceeded { size, cap });
        }
        let mut out = Vec::with_capacity(size);
        for a in &self.terms {
            for b in &other.terms {
                out.push(FracTerm::new(
                    a.coeff * b.coeff,
                    snap(a.px + b.px),
                    snap(a.py + b.py),
                ));
            }
        }
        Ok(Self::from_terms(out))
    }

    /// Term-wise Caputo derivative of order `0 < order <= 1` along `axis`.
    pub fn caputo_deriv(&self, order: f64, axis: Axis) -> Result<Self> {
        if !(order > 0.0 && order <= 1.0) {
            return Err(Error::OrderOutOfRange {
                order,
                range: "(0, 1]",
            });
        }
        let mut out = Vec::with_capacity(self.len());
        for t in &self.terms {
            let p = t.exponent(axis);
            if p == 0.0 {
                continue;
            }
            let c = gamma_ratio(p + 1.0, p + 1.0 - order)?;
            out.push(FracTerm {
                coeff: t.coeff * c,
                ..t.with_exponent(axis, snap(p - order))
            });
        }
        Ok(Self::from_terms(out))
    }

    /// Term-wise Riemann-Liouville integral of order `order > 0` along `axis`.
    pub fn rl_integral(&self, order: f64, axis: Axis) -> Result<Self> {
        if !(order > 0.0 && order.is_finite()) {
            return Err(Error::OrderOutOfRange {
                order,
                range: "(0, inf)",
            });
        }
        let mut out = Vec::with_capacity(self.len());
        for t in &self.terms {
            let q = t.exponent(axis);
            if q <= -1.0 + EXPONENT_TOLERANCE {
                return Err(Error::NonIntegrable { exponent: q, axis });
            }
            let c = gamma_ratio(q + 1.0, q + 1.0 + order)?;
            out.push(FracTerm {
                coeff: t.coeff * c,
                ..t.with_exponent(axis, snap(q + order))
            });
        }
        Ok(Self::from_terms(out))
    }

    /// Sum of `coeff * x^px * y^py` with `0^0 = 1`.
    pub fn evaluate(&self, x: f64, y: f64) -> Result<f64> {
        let mut sum = 0.0;
        for t in &self.terms {
            sum += t.coeff * checked_pow(x, t.px)? * checked_pow(y, t.py)?;
        }
        Ok(sum)
    }

    /// Term-for-term comparison: identical exponent sets (within
    /// [`EXPONENT_TOLERANCE`]) and coefficients within `rel_tol` relative.
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        self.len() == other.len()
            && self.terms.iter().zip(&other.terms).all(|(a, b)| {
                (a.px - b.px).abs() <= EXPONENT_TOLERANCE
                    && (a.py - b.py).abs() <= EXPONENT_TOLERANCE
                    && (a.coeff - b.coeff).abs() <= rel_tol * a.coeff.abs().max(b.coeff.abs())
            })
    }

    /// Coefficient of `x^px * y^py`, zero if absent.
    pub fn coeff_of(&self, px: f64, py: f64) -> f64 {
        self.terms
            .iter()
            .find(|t| {
                (t.px - px).abs() <= EXPONENT_TOLERANCE && (t.py - py).abs() <= EXPONENT_TOLERANCE
            })
            .map_or(0.0, |t| t.coeff)
    }
}

fn checked_pow(base: f64, exponent: f64) -> Result<f64> {
    if exponent == 0.0 {
        return Ok(1.0);
    }
    if base == 0.0 {
        return if exponent > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::Domain { base, exponent })
        };
    }
    if base < 0.0 {
        if exponent != exponent.round() {
            return Err(Error::Domain { base, exponent });
        }
        return Ok(base.powi(exponent as i32));
    }
    Ok(base.powf(exponent))
}

fn normalize_terms(mut terms: Vec<FracTerm>) -> Vec<FracTerm> {
    terms.retain(|t| t.coeff != 0.0);
    for t in &mut terms {
        t.px = snap(t.px);
        t.py = snap(t.py);
    }
    terms.sort_by(FracTerm::cmp_exponents);

    let mut merged: Vec<FracTerm> = Vec::with_capacity(terms.len());
    let mut i = 0;
    while i < terms.len() {
        // cluster on px, then merge runs of equal py inside the cluster
        let px0 = terms[i].px;
        let mut j = i;
        while j < terms.len() && terms[j].px - px0 <= EXPONENT_TOLERANCE {
            j += 1;
        }
        let cluster = &mut terms[i..j];
        cluster.sort_by(|a, b| a.py.total_cmp(&b.py));
        let mut k = 0;
        while k < cluster.len() {
            let py0 = cluster[k].py;
            let mut acc = 0.0;
            while k < cluster.len() && cluster[k].py - py0 <= EXPONENT_TOLERANCE {
                acc += cluster[k].coeff;
                k += 1;
            }
            merged.push(FracTerm::new(acc, px0, py0));
        }
        i = j;
    }

    let largest = merged.iter().fold(0.0f64, |m, t| m.max(t.coeff.abs()));
    let floor = DROP_THRESHOLD * largest.max(1.0);
    merged.retain(|t| t.coeff.abs() > floor);
    merged
}

impl fmt::Display for FracSeries {
    /// `c*x^p*y^q` terms joined by ` + ` / ` - `, coefficients with 17
    /// significant digits. Unit coefficients and unit exponents are elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff < 0.0;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = t.coeff.abs();
            let mut parts = Vec::new();
            let has_vars = t.px != 0.0 || t.py != 0.0;
            if mag != 1.0 || !has_vars {
                parts.push(format_sig(mag, ROUND_TRIP_DIGITS));
            }
            for (name, e) in [("x", t.px), ("y", t.py)] {
                if e == 1.0 {
                    parts.push(name.to_string());
                } else if e != 0.0 {
                    parts.push(format!("{name}^{}", format_sig(e, ROUND_TRIP_DIGITS)));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl std::ops::Add for &FracSeries {
    type Output = FracSeries;
    fn add(self, rhs: Self) -> FracSeries {
        FracSeries::add(self, rhs)
    }
}

impl std::ops::Sub for &FracSeries {
    type Output = FracSeries;
    fn sub(self, rhs: Self) -> FracSeries {
        FracSeries::sub(self, rhs)
    }
}

impl std::ops::Neg for &FracSeries {
    type Output = FracSeries;
    fn neg(self) -> FracSeries {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(terms: &[(f64, f64, f64)]) -> FracSeries {
        FracSeries::from_terms(terms.iter().map(|&(c, p, q)| FracTerm::new(c, p, q)))
    }

    const INV_GAMMA_1_5: f64 = std::f64::consts::FRAC_2_SQRT_PI;

    #[test]
    fn normalize_examples() {
        assert_eq!(s(&[(1.0, 1.0, 0.0), (2.0, 1.0, 0.0)]), s(&[(3.0, 1.0, 0.0)]));
        assert!(s(&[(0.0, 2.0, 0.0)]).is_empty());
        assert!(s(&[(1.0, 0.5, 1.0), (-1.0, 0.5, 1.0)]).is_empty());
    }

    #[test]
    fn normalize_merges_within_tolerance_and_sorts() {
        let a = s(&[
            (1.0, 1.0, 2.0),
            (1.0, 1.0 + 5e-13, 1.0),
            (2.0, 0.0, 3.0),
            (1.0, 1.0, 1.0 - 5e-13),
        ]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.terms()[0].px, 0.0);
        assert!((a.coeff_of(1.0, 1.0) - 2.0).abs() < 1e-15);
        assert_eq!(a.normalize(), a);
    }

    #[test]
    fn drop_threshold_is_relative_to_largest() {
        let a = s(&[(1e6, 1.0, 0.0), (1e-10, 2.0, 0.0)]);
        assert_eq!(a.len(), 1);
        let b = s(&[(1e-14, 2.0, 0.0)]);
        assert_eq!(b.len(), 1);
        let c = s(&[(5e-16, 2.0, 0.0)]);
        assert!(c.is_empty());
    }

    #[test]
    fn add_and_scale() {
        let one = FracSeries::constant(1.0);
        let x = FracSeries::monomial(1.0, 1.0, 0.0);
        assert_eq!(one.add(&x), s(&[(1.0, 0.0, 0.0), (1.0, 1.0, 0.0)]));
        assert_eq!(x.add(&FracSeries::zero()), x);
        assert!(x.add(&x.scale(-1.0)).is_empty());
        assert_eq!(x.scale(-1.0), s(&[(-1.0, 1.0, 0.0)]));
        assert!(x.scale(0.0).is_empty());
        assert_eq!(s(&[(2.0, 0.5, 0.0)]).scale(0.5), s(&[(1.0, 0.5, 0.0)]));
    }

    #[test]
    fn mul_examples() {
        let x = FracSeries::monomial(1.0, 1.0, 0.0);
        assert_eq!(x.mul(&x).unwrap(), s(&[(1.0, 2.0, 0.0)]));
        let a = s(&[(1.0, 0.0, 0.0), (1.0, 1.0, 0.0)]);
        let b = s(&[(1.0, 0.0, 0.0), (-1.0, 1.0, 0.0)]);
        assert_eq!(a.mul(&b).unwrap(), s(&[(1.0, 0.0, 0.0), (-1.0, 2.0, 0.0)]));
        let c = s(&[(1.0, 0.5, 0.0)]).mul(&s(&[(2.0, 0.0, 0.5)])).unwrap();
        assert_eq!(c, s(&[(2.0, 0.5, 0.5)]));
    }

    #[test]
    fn mul_respects_cap() {
        let a = FracSeries::from_terms((0..101).map(|k| FracTerm::new(1.0, k as f64, 0.0)));
        let b = FracSeries::from_terms((0..100).map(|k| FracTerm::new(1.0, 0.0, k as f64)));
        assert_eq!(
            a.mul(&b).unwrap_err(),
            Error::TermCapExceeded {
                size: 10_100,
                cap: 10_000
            }
        );
        assert!(a.mul_capped(&b, 20_000).is_ok());
    }

    #[test]
    fn caputo_examples() {
        let x = FracSeries::monomial(1.0, 1.0, 0.0);
        assert_eq!(x.caputo_deriv(1.0, Axis::X).unwrap(), FracSeries::constant(1.0));
        assert!(FracSeries::constant(1.0).caputo_deriv(0.5, Axis::X).unwrap().is_empty());
        let d = x.caputo_deriv(0.5, Axis::X).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.terms()[0].px, 0.5);
        assert!((d.terms()[0].coeff - INV_GAMMA_1_5).abs() < 1e-15);
        // y-only terms are constants for D_x
        let yq = FracSeries::monomial(3.0, 0.0, 0.7);
        assert!(yq.caputo_deriv(0.3, Axis::X).unwrap().is_empty());
    }

    #[test]
    fn caputo_order_range() {
        let x = FracSeries::monomial(1.0, 1.0, 0.0);
        assert!(matches!(x.caputo_deriv(0.0, Axis::X), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(x.caputo_deriv(1.5, Axis::Y), Err(Error::OrderOutOfRange { .. })));
    }

    #[test]
    fn caputo_formal_rule_on_negative_exponents() {
        // x^{-1/2}: Gamma(1/2)/Gamma(-1/4) x^{-5/4}
        let t = FracSeries::monomial(1.0, -0.5, 0.0);
        let d = t.caputo_deriv(0.75, Axis::X).unwrap();
        let expected = gamma_ratio(0.5, -0.25).unwrap();
        assert!((d.coeff_of(-1.25, 0.0) - expected).abs() < 1e-14);
        // x^{-1} has a numerator pole
        let bad = FracSeries::monomial(1.0, -1.0, 0.0);
        assert!(matches!(bad.caputo_deriv(0.75, Axis::X), Err(Error::GammaPole(_))));
        // denominator pole Gamma(-1) zeroes the term
        let t = FracSeries::monomial(1.0, -1.25, 0.0);
        assert!(t.caputo_deriv(0.75, Axis::X).unwrap().is_empty());
    }

    #[test]
    fn rl_examples() {
        let one = FracSeries::constant(1.0);
        assert_eq!(one.rl_integral(1.0, Axis::Y).unwrap(), s(&[(1.0, 0.0, 1.0)]));
        let x = FracSeries::monomial(1.0, 1.0, 0.0);
        let j = x.rl_integral(0.5, Axis::Y).unwrap();
        assert_eq!(j.terms()[0].px, 1.0);
        assert_eq!(j.terms()[0].py, 0.5);
        assert!((j.terms()[0].coeff - INV_GAMMA_1_5).abs() < 1e-15);
        let y = FracSeries::monomial(1.0, 0.0, 1.0);
        assert_eq!(y.rl_integral(1.0, Axis::Y).unwrap(), s(&[(0.5, 0.0, 2.0)]));
    }

    #[test]
    fn rl_errors() {
        let one = FracSeries::constant(1.0);
        assert!(matches!(one.rl_integral(0.0, Axis::Y), Err(Error::OrderOutOfRange { .. })));
        let bad = FracSeries::monomial(1.0, 0.0, -1.0);
        assert!(matches!(bad.rl_integral(0.5, Axis::Y), Err(Error::NonIntegrable { .. })));
        let ok = FracSeries::monomial(1.0, 0.0, -0.5);
        assert!(ok.rl_integral(0.5, Axis::Y).is_ok());
    }

    #[test]
    fn evaluate_examples() {
        let a = s(&[(1.0, 0.0, 0.0), (1.0, 1.0, 1.0)]);
        assert!((a.evaluate(0.3, 0.1).unwrap() - 1.03).abs() < 1e-15);
        assert_eq!(s(&[(1.0, 0.5, 0.0)]).evaluate(0.25, 0.0).unwrap(), 0.5);
        assert!(matches!(
            s(&[(1.0, -1.0, 0.0)]).evaluate(0.0, 0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            s(&[(1.0, 0.5, 0.0)]).evaluate(-1.0, 0.0),
            Err(Error::Domain { .. })
        ));
        assert_eq!(s(&[(1.0, 3.0, 0.0)]).evaluate(-2.0, 0.0).unwrap(), -8.0);
        assert_eq!(s(&[(2.0, 0.0, 0.0), (1.0, 1.5, 0.0)]).evaluate(0.0, 0.0).unwrap(), 2.0);
    }

    #[test]
    fn display_form() {
        let a = s(&[(1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (-1.0, 1.0, 1.0), (-1.0, 0.0, 1.0)]);
        assert_eq!(a.to_string(), "1 - y + x - x*y");
        let b = s(&[(-2.5, 1.5, 0.0), (0.25, 0.0, 0.5)]);
        assert_eq!(b.to_string(), "0.25*y^0.5 - 2.5*x^1.5");
        assert_eq!(FracSeries::zero().to_string(), "0");
        assert_eq!(s(&[(INV_GAMMA_1_5, 1.0, 0.5)]).to_string(), "1.1283791670955126*x*y^0.5");
    }
}
