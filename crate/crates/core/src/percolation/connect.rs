use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};

use super::Occupancy;
use crate::lattice::TorusGeometry;

/// Result of a breadth-first search from one site.
#[derive(Debug, Clone, Default)]
pub struct Reach {
    order: Vec<u64>,
    dist: FxHashMap<u64, u32>,
}

impl Reach {
    /// Reached sites in discovery order (the start site excluded).
    pub fn sites(&self) -> &[u64] {
        &self.order
    }

    pub fn contains(&self, site: u64) -> bool {
        self.dist.contains_key(&site)
    }

    /// Chemical distance from the start, if reached.
    pub fn distance(&self, site: u64) -> Option<u32> {
        self.dist.get(&site).copied()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Breadth-first search from `start` where only sites accepted by
/// `passable` may be passed through. Every site reached is recorded, passable
/// or not; the search stops early once `stop` is reached.
pub fn explore(
    geometry: &TorusGeometry,
    start: u64,
    mut passable: impl FnMut(u64) -> bool,
    stop: Option<u64>,
) -> Reach {
    let mut reach = Reach::default();
    let mut queue = VecDeque::new();
    queue.push_back((start, 0u32));
    while let Some((site, d)) = queue.pop_front() {
        for next in geometry.neighbor_sites(site) {
            if next == start || reach.dist.contains_key(&next) {
                continue;
            }
            reach.dist.insert(next, d + 1);
            reach.order.push(next);
            if Some(next) == stop {
                return reach;
            }
            if passable(next) {
                queue.push_back((next, d + 1));
            }
        }
    }
    reach
}

/// All sites `z` with `u <-> z`, avoiding `removed` as interior vertices.
pub fn reachable<C: Occupancy>(c: &C, u: u64, removed: Option<&FxHashSet<u64>>) -> Reach {
    explore(c.geometry(), u, |s| c.is_occupied(s) && removed.is_none_or(|r| !r.contains(&s)), None)
}

/// `u <-> x` through occupied interior vertices outside `removed`.
pub fn connected<C: Occupancy>(c: &C, u: u64, x: u64, removed: Option<&FxHashSet<u64>>) -> bool {
    chemical_distance(c, u, x, removed).is_some()
}

/// Connectivity with an arbitrary rule for interior vertices.
pub fn connected_avoiding(geometry: &TorusGeometry, u: u64, x: u64, passable: impl FnMut(u64) -> bool) -> bool {
    u != x && explore(geometry, u, passable, Some(x)).contains(x)
}

/// Length of the shortest `u`-`x` path with occupied interior, if any.
pub fn chemical_distance<C: Occupancy>(c: &C, u: u64, x: u64, removed: Option<&FxHashSet<u64>>) -> Option<u32> {
    if u == x {
        return None;
    }
    explore(c.geometry(), u, |s| c.is_occupied(s) && removed.is_none_or(|r| !r.contains(&s)), Some(x)).distance(x)
}

/// The cluster `{x}` plus every occupied site connected to `x`.
pub fn cluster<C: Occupancy>(c: &C, x: u64) -> Vec<u64> {
    let mut out = vec![x];
    out.extend(reachable(c, x, None).sites().iter().copied().filter(|&s| c.is_occupied(s)));
    out
}

/// Whether some self-avoiding `u`-`v` path with occupied interior has at
/// least `min_edges` edges. Exhaustive search, only meant for small windows.
pub fn long_path_exists<C: Occupancy>(c: &C, u: u64, v: u64, min_edges: u32) -> bool {
    fn dfs<C: Occupancy>(c: &C, at: u64, v: u64, len: u32, min_edges: u32, seen: &mut FxHashSet<u64>) -> bool {
        for next in c.geometry().neighbor_sites(at) {
            if next == v {
                if len + 1 >= min_edges {
                    return true;
                }
                continue;
            }
            if seen.contains(&next) || !c.is_occupied(next) {
                continue;
            }
            seen.insert(next);
            let found = dfs(c, next, v, len + 1, min_edges, seen);
            seen.remove(&next);
            if found {
                return true;
            }
        }
        false
    }
    if u == v {
        return false;
    }
    let mut seen = FxHashSet::default();
    seen.insert(u);
    dfs(c, u, v, 0, min_edges, &mut seen)
}
