//! Exact combinatorial oracles: walk counts `J^{*m}(x)`, point-class counts,
//! their reconstruction as polynomials in `Ω = 2d`, self-avoiding cycles
//! through two points, and inclusion-exclusion occupation polynomials.

mod classes;
mod cycles;
mod interp;
mod probability;
mod walks;

pub use classes::{class_count, class_count_by_enumeration, class_count_by_formula};
pub use cycles::{
    enumerate_cycles, self_avoiding_paths, short_cycle_pi0_polynomial, short_cycle_probability, CycleFamily,
};
pub use interp::{polynomial_in_omega, OmegaPolynomial};
pub use probability::{union_occupation_probability, ProbabilityPolynomial, UnionBudget};
pub use walks::{walk_counts, WalkTable, DEFAULT_WALK_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("walk table over {needed} points exceeds the budget of {budget}")]
    WalkBudget { needed: u128, budget: u128 },
    #[error("count is not a polynomial of degree <= {degree} in Ω: held-out d={d} gives {actual}, interpolation predicts {predicted}")]
    NotPolynomial { degree: usize, d: usize, actual: String, predicted: String },
    #[error("cycle length {0} must be even, at least 4 and at most 8")]
    BadCycleLength(usize),
    #[error("cycles need two distinct points; got the origin")]
    DegenerateBase,
    #[error("inclusion-exclusion over {sites} sites exceeds the limit of {limit}")]
    TooManySites { sites: usize, limit: usize },
    #[error("inclusion-exclusion needs more than {0} distinct unions")]
    UnionBudget(usize),
    #[error("l1 = {l1} must be at least linf = {linf}")]
    BadNorms { l1: u32, linf: u32 },
}
