//! Exact truncated power series in `t = 1/(2d)` (or `s = 1/(2d - 1)`),
//! bivariate polynomials in `(q, t)` with `q = 2d * p`, and the fixed-point
//! solver for `q_c = 2d * p_c`.
//!
//! Everything here is exact rational arithmetic. A series of order `M`
//! knows its coefficients for `t^0 ..= t^M`; terms beyond `M` are unknown,
//! and every operation returns the smallest order that its inputs justify.

mod bivariate;
mod solver;
mod truncated;

pub use bivariate::BivariatePoly;
pub use solver::{fixed_point_residual, lace_coefficient_inputs, solve_pc_fixed_point, FixedPointSolution, Sign};
pub use truncated::{SeriesJson, TruncatedSeries, Variable};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for building a [`Rational`] from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series variables differ: {0} vs {1}")]
    TagMismatch(Variable, Variable),
    #[error("series has zero constant term and cannot be inverted")]
    NonInvertible,
    #[error("change of variable needs a series without constant term")]
    NonzeroConstant,
    #[error("expected a series in {expected}, got {found}")]
    WrongVariable { expected: Variable, found: Variable },
    #[error("requested order {requested} exceeds the order {justified} justified by the inputs")]
    OrderNotJustified { requested: usize, justified: usize },
    #[error("fixed-point iteration did not stabilise within {0} rounds")]
    NoConvergence(usize),
    #[error("dimension must be at least 1")]
    BadDimension,
    #[error("malformed series: {0}")]
    Malformed(String),
}
