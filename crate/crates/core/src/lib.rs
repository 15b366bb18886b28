//! Desk-scale machinery around the `1/(2d)` expansion of the site-percolation
//! critical point on Z^d.
//!
//! * [`series`]: exact truncated series and the fixed-point solver for `2d p_c`.
//! * [`lattice`]: points of Z^d and the periodic box.
//! * [`enumeration`]: exact walk, point-class and cycle counts, and
//!   inclusion-exclusion occupation polynomials.
//! * [`percolation`]: seed-reproducible configurations, connectivity queries,
//!   wrapping thresholds, two-point functions and triangle diagrams.
//! * [`lace`]: the lace-expansion events and Monte Carlo estimates of the
//!   first three expansion coefficients.

pub mod enumeration;
pub mod exec;
pub mod json;
pub mod lace;
pub mod lattice;
pub mod percolation;
pub mod series;

pub use exec::Execution;
pub use lattice::{Point, TorusGeometry};
pub use percolation::Estimate;
