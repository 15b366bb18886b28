//! Lace-expansion events and Monte Carlo estimates of the first three
//! expansion coefficients `Pi^(0)`, `Pi^(1)`, `Pi^(2)` summed over `x`.
//!
//! Cluster-valued arguments are frozen sets: `C_{i-1}` is computed from
//! `omega_{i-1}` first and `E'` is then evaluated on `omega_i` alone.

mod coefficients;
mod events;

pub use coefficients::{
    oze_residual, pi_hat_estimate, pi_hat_sample, ConfigSequence, LaceError, OzeReport, PiHat, PiSample,
};
pub use events::{
    eprime, eprime_targets, modified_cluster, pivotal_points, through_connection, PivotalSet, ThickenedSet,
};
