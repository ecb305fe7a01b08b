use thiserror::Error;

use crate::series::Axis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at z = {0}")]
    GammaPole(f64),

    #[error("product would hold {size} terms, above the cap of {cap}")]
    TermCapExceeded { size: usize, cap: usize },

    #[error("operator order {order} outside the admissible range {range}")]
    OrderOutOfRange { order: f64, range: &'static str },

    #[error("exponent {exponent} on {axis} is not integrable (must exceed -1)")]
    NonIntegrable { exponent: f64, axis: Axis },

    #[error("cannot evaluate {base}^{exponent}")]
    Domain { base: f64, exponent: f64 },

    #[error("Adomian polynomial A_{n} needs {needed} components, only {available} given")]
    InsufficientComponents {
        n: usize,
        needed: usize,
        available: usize,
    },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("partial sum index {n} outside 1..={max}")]
    PartialSumOutOfRange { n: usize, max: usize },

    #[error("unknown example id {0} (expected 1..=4)")]
    UnknownExample(u32),

    #[error("exact solution is singular at y = {y}")]
    Singular { y: f64 },

    #[error("duplicate interpolation node {0}")]
    Interpolation(f64),

    #[error("quadrature did not converge (estimated error {estimate:e})")]
    Quadrature { estimate: f64 },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("at ADM depth {depth}: {source}")]
    AtDepth { depth: usize, source: Box<Error> },
}

impl Error {
    pub(crate) fn at_depth(self, depth: usize) -> Self {
        Error::AtDepth {
            depth,
            source: Box::new(self),
        }
    }
}
