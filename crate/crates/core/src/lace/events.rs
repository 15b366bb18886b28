use std::collections::BTreeSet;

use rustc_hash::FxHashSet;

use crate::lattice::TorusGeometry;
use crate::percolation::{connected_avoiding, explore, reachable, Occupancy};

/// `<A>`: the set `A` together with every neighbour of a point of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThickenedSet {
    source: BTreeSet<u64>,
    sites: FxHashSet<u64>,
    everything: bool,
}

impl ThickenedSet {
    pub fn new(g: &TorusGeometry, a: impl IntoIterator<Item = u64>) -> Self {
        let source: BTreeSet<u64> = a.into_iter().collect();
        let mut sites: FxHashSet<u64> = source.iter().copied().collect();
        for &s in &source {
            sites.extend(g.neighbor_sites(s));
        }
        ThickenedSet { source, sites, everything: false }
    }

    /// `<Z^d>`, the whole box.
    pub fn everything() -> Self {
        ThickenedSet { source: BTreeSet::new(), sites: FxHashSet::default(), everything: true }
    }

    pub fn source(&self) -> &BTreeSet<u64> {
        &self.source
    }

    #[inline]
    pub fn contains(&self, site: u64) -> bool {
        self.everything || self.sites.contains(&site)
    }

    /// Number of sites, or `None` for the whole box.
    pub fn len(&self) -> Option<usize> {
        (!self.everything).then_some(self.sites.len())
    }

    pub fn is_empty(&self) -> bool {
        !self.everything && self.sites.is_empty()
    }
}

/// Pivotal points of a pair `(u, x)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PivotalSet {
    sites: BTreeSet<u64>,
}

impl PivotalSet {
    pub fn contains(&self, site: u64) -> bool {
        self.sites.contains(&site)
    }

    pub fn sites(&self) -> &BTreeSet<u64> {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }
}

/// `C^u(x)`: `x` plus the occupied sites other than `u` connected to `x`
/// without passing through `u`.
pub fn modified_cluster<C: Occupancy>(c: &C, x: u64, u: u64) -> Vec<u64> {
    let reach = explore(c.geometry(), x, |s| s != u && c.is_occupied(s), None);
    let mut out = vec![x];
    out.extend(reach.sites().iter().copied().filter(|&s| s != u && c.is_occupied(s)));
    out
}

/// `u ->A-> x`: connected, and either every connecting path has an interior
/// vertex in `<A>` or `x` lies in `<A>`.
pub fn through_connection<C: Occupancy>(c: &C, u: u64, x: u64, a: &ThickenedSet) -> bool {
    let g = c.geometry();
    if !connected_avoiding(g, u, x, |s| c.is_occupied(s)) {
        return false;
    }
    a.contains(x) || !connected_avoiding(g, u, x, |s| c.is_occupied(s) && !a.contains(s))
}

/// Sites `w` such that `u <-> x` holds with `w` made occupied but fails with
/// `w` made vacant.
///
/// If `u <-> x` already holds, these are the occupied sites whose removal
/// disconnects the pair. Otherwise they are the vacant sites reached both
/// from `u` and from `x`.
pub fn pivotal_points<C: Occupancy>(c: &C, u: u64, x: u64) -> PivotalSet {
    let g = c.geometry();
    let mut sites = BTreeSet::new();
    if u == x {
        return PivotalSet { sites };
    }
    let from_u = reachable(c, u, None);
    if from_u.contains(x) {
        for &w in from_u.sites() {
            if w != u && w != x && c.is_occupied(w) && !connected_avoiding(g, u, x, |s| s != w && c.is_occupied(s)) {
                sites.insert(w);
            }
        }
    } else {
        let from_x = reachable(c, x, None);
        sites.extend(from_u.sites().iter().copied().filter(|&w| w != u && w != x && from_x.contains(w)));
    }
    PivotalSet { sites }
}

/// `E'(v, u; A)`, straight from its definition.
pub fn eprime<C: Occupancy>(c: &C, v: u64, u: u64, a: &ThickenedSet) -> bool {
    through_connection(c, v, u, a) && !pivotal_points(c, v, u).sites().iter().any(|&w| through_connection(c, v, w, a))
}

/// Every `u` with `E'(v, u; A)`, sorted.
///
/// Only sites reachable from `v` are connected to it, and a pivotal point of
/// a connected pair is an occupied reachable site whose removal disconnects
/// the pair. So one search from `v` per occupied site `w` that is itself
/// reached through `<A>` marks every `u` for which `w` spoils `E'`.
pub fn eprime_targets<C: Occupancy>(c: &C, v: u64, a: &ThickenedSet) -> Vec<u64> {
    let g = c.geometry();
    let reach = reachable(c, v, None);
    let off = explore(g, v, |s| c.is_occupied(s) && !a.contains(s), None);
    let through = |z: u64| a.contains(z) || !off.contains(z);
    let mut spoiled: FxHashSet<u64> = FxHashSet::default();
    for &w in reach.sites() {
        if !c.is_occupied(w) || !through(w) {
            continue;
        }
        let without = explore(g, v, |s| s != w && c.is_occupied(s), None);
        for &z in reach.sites() {
            if z != w && !without.contains(z) {
                spoiled.insert(z);
            }
        }
    }
    let mut out: Vec<u64> = reach.sites().iter().copied().filter(|&z| through(z) && !spoiled.contains(&z)).collect();
    out.sort_unstable();
    out
}
