use serde::{Deserialize, Serialize};

use super::{chemical_distance, double_connected, Estimate, LazyConfiguration, Occupancy};
use crate::exec::Execution;
use crate::lattice::{Point, TorusGeometry};

/// Which connection event a two-point estimate counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "l")]
pub enum TwoPointVariant {
    /// `0 <-> x`
    Plain,
    /// connected, shortest path has at least `l` edges
    AtLeast(u32),
    /// connected by a path of at most `l` edges
    AtMost(u32),
    /// shortest path has exactly `l` edges
    Exactly(u32),
}

/// Indicator of `variant` for the pair `(u, x)` in one configuration.
pub fn two_point_indicator<C: Occupancy>(c: &C, u: u64, x: u64, variant: TwoPointVariant) -> bool {
    let d = chemical_distance(c, u, x, None);
    match variant {
        TwoPointVariant::Plain => d.is_some(),
        TwoPointVariant::AtLeast(l) => d.is_some_and(|d| d >= l),
        TwoPointVariant::AtMost(l) => d.is_some_and(|d| d <= l),
        TwoPointVariant::Exactly(l) => d == Some(l),
    }
}

/// Frequency of `0 -> x` events over configurations with streams `0..samples`.
pub fn two_point(
    g: &TorusGeometry,
    p: f64,
    x: &Point,
    variant: TwoPointVariant,
    samples: u64,
    seed: u64,
    exec: Execution,
) -> Estimate {
    let target = g.site_index(x);
    let hits = exec.map(samples, |i| {
        let c = LazyConfiguration::new(g, p, seed, i);
        two_point_indicator(&c, g.origin(), target, variant)
    });
    Estimate::from_samples(hits.into_iter().map(f64::from))
}

/// Frequency of `0 <=> x` over configurations with streams `0..samples`.
pub fn double_connection(g: &TorusGeometry, p: f64, x: &Point, samples: u64, seed: u64, exec: Execution) -> Estimate {
    let target = g.site_index(x);
    let hits = exec.map(samples, |i| {
        let c = LazyConfiguration::new(g, p, seed, i);
        double_connected(&c, g.origin(), target)
    });
    Estimate::from_samples(hits.into_iter().map(f64::from))
}
