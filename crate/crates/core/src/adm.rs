//! Adomian decomposition for `D_y^a u + u * D_x^b u = g(x)`, `u(x, 0) = f(x)`.
//!
//! The solution is built as `u = sum u_n` with
//!
//! ```text
//! u_0     = f(x) + J_y^a g(x)
//! u_{n+1} = -J_y^a A_n
//! A_n     = sum_{i=0}^{n} u_i * D_x^b u_{n-i}
//! ```
//!
//! The convolution form of `A_n` is exactly the n-th Taylor coefficient in
//! lambda of `N(sum lambda^i u_i)` for the bilinear `N(u) = u * D_x^b u`;
//! [`adomian_lambda_oracle`] evaluates that definition numerically.

use crate::error::{Error, Result};
use crate::series::{Axis, FracSeries, DEFAULT_TERM_CAP};

/// One instance of the equation together with its truncation depth.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    /// Order of the Caputo derivative in y, in (0, 1].
    pub alpha: f64,
    /// Order of the Caputo derivative in x, in (0, 1].
    pub beta: f64,
    /// Initial condition `u(x, 0)`; no y-dependence.
    pub ic: FracSeries,
    /// Forcing `g(x)`; no y-dependence.
    pub forcing: FracSeries,
    /// Number of components `N` to compute.
    pub n_terms: usize,
    /// Cap on raw terms per product, see [`FracSeries::mul_capped`].
    pub term_cap: usize,
}

fn check_order(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidProblem(format!("{name} = {v} must lie in (0, 1]")))
    }
}

impl ProblemSpec {
    pub fn new(
        alpha: f64,
        beta: f64,
        ic: FracSeries,
        forcing: FracSeries,
        n_terms: usize,
    ) -> Result<Self> {
        let spec = ProblemSpec {
            alpha,
            beta,
            ic,
            forcing,
            n_terms,
            term_cap: DEFAULT_TERM_CAP,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_term_cap(mut self, cap: usize) -> Self {
        self.term_cap = cap;
        self
    }

    pub fn with_n_terms(mut self, n_terms: usize) -> Self {
        self.n_terms = n_terms;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_order("alpha", self.alpha)?;
        check_order("beta", self.beta)?;
        if self.n_terms == 0 {
            return Err(Error::InvalidProblem("n_terms must be at least 1".into()));
        }
        if !self.ic.is_constant_in(Axis::Y) {
            return Err(Error::InvalidProblem(
                "initial condition must not depend on y".into(),
            ));
        }
        if !self.forcing.is_constant_in(Axis::Y) {
            return Err(Error::InvalidProblem("forcing must not depend on y".into()));
        }
        Ok(())
    }
}

/// Components `u_0 .. u_{N-1}` and their cached partial sums.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSeries {
    problem: ProblemSpec,
    components: Vec<FracSeries>,
    partial_sums: Vec<FracSeries>,
}

impl SolutionSeries {
    pub fn problem(&self) -> &ProblemSpec {
        &self.problem
    }

    pub fn components(&self) -> &[FracSeries] {
        &self.components
    }

    /// `Phi_n = u_0 + ... + u_{n-1}` for `1 <= n <= N`.
    pub fn partial_sum(&self, n: usize) -> Result<&FracSeries> {
        if n == 0 || n > self.partial_sums.len() {
            return Err(Error::PartialSumOutOfRange {
                n,
                max: self.partial_sums.len(),
            });
        }
        Ok(&self.partial_sums[n - 1])
    }

    /// The full truncated solution `Phi_N`.
    pub fn truncated(&self) -> &FracSeries {
        self.partial_sums.last().expect("n_terms >= 1")
    }

    pub fn evaluate(&self, x: f64, y: f64) -> Result<f64> {
        self.truncated().evaluate(x, y)
    }
}

fn convolve(
    components: &[FracSeries],
    derivs: &[FracSeries],
    n: usize,
    cap: usize,
) -> Result<FracSeries> {
    let mut acc = FracSeries::zero();
    for i in 0..=n {
        acc = acc.add(&components[i].mul_capped(&derivs[n - i], cap)?);
    }
    Ok(acc)
}

/// `A_n = sum_{i=0}^{n} u_i * D_x^beta u_{n-i}`; needs `u_0 .. u_n`.
pub fn adomian_polynomial(components: &[FracSeries], n: usize, beta: f64) -> Result<FracSeries> {
    if components.len() < n + 1 {
        return Err(Error::InsufficientComponents {
            n,
            needed: n + 1,
            available: components.len(),
        });
    }
    let derivs = components[..=n]
        .iter()
        .map(|u| u.caputo_deriv(beta, Axis::X))
        .collect::<Result<Vec<_>>>()?;
    convolve(components, &derivs, n, DEFAULT_TERM_CAP)
}

/// Runs the decomposition recursion up to `problem.n_terms` components.
///
/// Errors are wrapped in [`Error::AtDepth`] carrying the index of the
/// component that could not be formed.
pub fn solve(problem: &ProblemSpec) -> Result<SolutionSeries> {
    problem.validate()?;
    let n_terms = problem.n_terms;
    let cap = problem.term_cap;

    let u0 = problem
        .forcing
        .rl_integral(problem.alpha, Axis::Y)
        .map(|j| problem.ic.add(&j))
        .map_err(|e| e.at_depth(0))?;
    let d0 = u0
        .caputo_deriv(problem.beta, Axis::X)
        .map_err(|e| e.at_depth(0))?;

    let mut components = Vec::with_capacity(n_terms);
    let mut derivs = Vec::with_capacity(n_terms);
    components.push(u0);
    derivs.push(d0);

    for n in 0..n_terms - 1 {
        let next = convolve(&components, &derivs, n, cap)
            .and_then(|a| a.rl_integral(problem.alpha, Axis::Y))
            .map(|j| j.scale(-1.0))
            .map_err(|e| e.at_depth(n + 1))?;
        // the last component's derivative is never consumed
        if n + 2 < n_terms {
            let d = next
                .caputo_deriv(problem.beta, Axis::X)
                .map_err(|e| e.at_depth(n + 1))?;
            derivs.push(d);
        }
        components.push(next);
    }

    let mut partial_sums = Vec::with_capacity(n_terms);
    let mut running = FracSeries::zero();
    for u in &components {
        running = running.add(u);
        partial_sums.push(running.clone());
    }

    Ok(SolutionSeries {
        problem: problem.clone(),
        components,
        partial_sums,
    })
}

/// Max over `points` of `|D_y^alpha s + s * D_x^beta s - g|`.
pub fn residual(problem: &ProblemSpec, s: &FracSeries, points: &[(f64, f64)]) -> Result<f64> {
    let dy = s.caputo_deriv(problem.alpha, Axis::Y)?;
    let dx = s.caputo_deriv(problem.beta, Axis::X)?;
    let r = dy
        .add(&s.mul_capped(&dx, problem.term_cap)?)
        .sub(&problem.forcing);
    let mut worst = 0.0f64;
    for &(x, y) in points {
        worst = worst.max(r.evaluate(x, y)?.abs());
    }
    Ok(worst)
}

/// Evaluates `A_n` straight from its generating definition
/// `A_n = (1/n!) d^n/dlambda^n N(sum_{i<=n} lambda^i u_i) |_{lambda=0}`.
///
/// At each probe point `N(lambda) = (sum lambda^i u_i) * (sum lambda^i D_x u_i)`
/// is a polynomial of degree `2n` in lambda; it is sampled at `2n + 1`
/// Chebyshev nodes and the coefficient of `lambda^n` is recovered by exact
/// interpolation.
pub fn adomian_lambda_oracle(
    components: &[FracSeries],
    n: usize,
    beta: f64,
    probe_points: &[(f64, f64)],
) -> Result<Vec<f64>> {
    if components.len() < n + 1 {
        return Err(Error::InsufficientComponents {
            n,
            needed: n + 1,
            available: components.len(),
        });
    }
    let derivs = components[..=n]
        .iter()
        .map(|u| u.caputo_deriv(beta, Axis::X))
        .collect::<Result<Vec<_>>>()?;

    let degree = 2 * n;
    let nodes: Vec<f64> = (0..=degree)
        .map(|k| {
            if degree == 0 {
                0.0
            } else {
                (std::f64::consts::PI * (2 * k + 1) as f64 / (2 * (degree + 1)) as f64).cos()
            }
        })
        .collect();

    let mut out = Vec::with_capacity(probe_points.len());
    for &(x, y) in probe_points {
        let u_vals = components[..=n]
            .iter()
            .map(|u| u.evaluate(x, y))
            .collect::<Result<Vec<_>>>()?;
        let d_vals = derivs
            .iter()
            .map(|d| d.evaluate(x, y))
            .collect::<Result<Vec<_>>>()?;
        let samples: Vec<f64> = nodes
            .iter()
            .map(|&lam| horner(&u_vals, lam) * horner(&d_vals, lam))
            .collect();
        let coeffs = interpolate_monomial(&nodes, &samples)?;
        out.push(coeffs[n]);
    }
    Ok(out)
}

fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// Monomial coefficients of the interpolating polynomial through
/// `(nodes[k], values[k])`, via Gaussian elimination with partial pivoting
/// on the Vandermonde system.
fn interpolate_monomial(nodes: &[f64], values: &[f64]) -> Result<Vec<f64>> {
    let m = nodes.len();
    for i in 0..m {
        for j in 0..i {
            if nodes[i] == nodes[j] {
                return Err(Error::Interpolation(nodes[i]));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = nodes
        .iter()
        .map(|&t| (0..m).map(|k| t.powi(k as i32)).collect())
        .collect();
    let mut b = values.to_vec();
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty");
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..m {
            let (upper, lower) = a.split_at_mut(row);
            let (pivot_row, target) = (&upper[col], &mut lower[0]);
            let f = target[col] / pivot_row[col];
            for (t, p) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                *t -= f * p;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; m];
    for row in (0..m).rev() {
        let s: f64 = (row + 1..m).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}
