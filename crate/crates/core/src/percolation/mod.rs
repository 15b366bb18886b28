//! Site percolation on the periodic box: reproducible configurations,
//! connectivity with endpoint-free paths, clusters, wrapping thresholds,
//! two-point functions, double connections and triangle diagrams.
//!
//! Throughout, a path joins its endpoints through *occupied interior*
//! vertices; the endpoints themselves may be vacant. Neighbours are always
//! connected and no site is connected to itself.

mod config;
mod connect;
mod ensemble;
mod estimate;
mod flow;
mod rng;
mod triangle;
mod union_find;
mod wrapping;

pub use config::{Configuration, LazyConfiguration, Occupancy, Sampling};
pub use connect::{
    chemical_distance, cluster, connected, connected_avoiding, explore, long_path_exists, reachable, Reach,
};
pub use ensemble::{double_connection, two_point, two_point_indicator, TwoPointVariant};
pub use estimate::{Accumulator, Estimate};
pub use flow::{double_connected, shortest_cycle_length};
pub use rng::{entropy_seed, site_word, site_words, uniform_from_word, word_below};
pub use triangle::{convolve3, triangle_diagrams, two_point_table, TriangleReport, TwoPointTable};
pub use union_find::{label_clusters, UnionFind};
pub use wrapping::{theta_and_pc, wrapping_sweep, SweepSample, ThetaPc};
