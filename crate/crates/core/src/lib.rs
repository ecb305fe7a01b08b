//! Adomian decomposition series for nonlinear time-space fractional PDEs
//!
//! ```text
//! D_y^a u + u * D_x^b u = g(x),   u(x, 0) = f(x),   0 < a, b <= 1
//! ```
//!
//! with Caputo derivatives in both variables. Solutions are carried as
//! finite generalized power series ([`FracSeries`]) on which the Caputo
//! derivative and the Riemann-Liouville integral act exactly through their
//! power rules, so every component `u_n` is a closed-form expression in
//! `x` and `y`.
//!
//! ```
//! use fracadm::{builtin_problem, solve, ExampleId};
//!
//! let problem = builtin_problem(ExampleId::new(4)?, 1.0, 1.0, 6)?;
//! let sol = solve(&problem)?;
//! let u = sol.evaluate(0.3, 0.1)?;
//! assert!((u - 0.3 / 1.1).abs() < 1e-6);
//! # Ok::<(), fracadm::Error>(())
//! ```

pub mod adm;
pub mod cli;
pub mod error;
pub mod grid;
pub mod numfmt;
pub mod parse;
pub mod problems;
pub mod quadrature;
pub mod series;
pub mod specialfn;

pub use adm::{adomian_lambda_oracle, adomian_polynomial, residual, solve, ProblemSpec, SolutionSeries};
pub use error::{Error, Result};
pub use grid::GridSpec;
pub use parse::parse_series;
pub use problems::{
    builtin_problem, exact_solution, make_table, recovered_depth, truncation_scan, ExampleId,
    ScanRow, TableCell, TableReport,
};
pub use quadrature::caputo_quadrature_oracle;
pub use series::{Axis, FracSeries, FracTerm};
pub use specialfn::{gamma, gamma_ratio, rgamma};
