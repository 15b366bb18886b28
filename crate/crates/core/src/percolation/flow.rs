//! Two internally disjoint occupied paths between a pair of sites, by
//! vertex-split min-cost flow.
//!
//! Interior sites are split into `in -> out` arcs of capacity 1, so flow 2
//! means two paths sharing no interior vertex. With unit cost per lattice
//! edge, the cheapest flow of value 2 is the shortest cycle through the pair.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::{explore, Occupancy};

struct Arc {
    to: usize,
    cap: i32,
    cost: i32,
}

struct Network {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network { arcs: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn add(&mut self, from: usize, to: usize, cap: i32, cost: i32) {
        self.adj[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, cost });
        self.adj[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
    }

    /// Push one unit along a cheapest residual path (Bellman-Ford queue).
    fn augment(&mut self, s: usize, t: usize) -> Option<i32> {
        let n = self.adj.len();
        let mut dist = vec![i32::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut queued = vec![false; n];
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(v) = queue.pop_front() {
            queued[v] = false;
            for &a in &self.adj[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && dist[v] + arc.cost < dist[arc.to] {
                    dist[arc.to] = dist[v] + arc.cost;
                    via[arc.to] = a;
                    if !queued[arc.to] {
                        queued[arc.to] = true;
                        queue.push_back(arc.to);
                    }
                }
            }
        }
        if dist[t] == i32::MAX {
            return None;
        }
        let mut v = t;
        while v != s {
            let a = via[v];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            v = self.arcs[a ^ 1].to;
        }
        Some(dist[t])
    }
}

/// Total length of the two shortest internally disjoint `a`-`b` paths with
/// occupied interiors, i.e. the length of the shortest such cycle through
/// `a` and `b`. `None` if no two such paths exist.
pub fn shortest_cycle_length<C: Occupancy>(c: &C, a: u64, b: u64) -> Option<u32> {
    if a == b {
        return None;
    }
    let g = c.geometry();
    let reach = explore(g, a, |s| c.is_occupied(s), Some(b));
    if !reach.contains(b) {
        return None;
    }
    // interior candidates: occupied sites reachable from `a` without passing `b`
    let region = explore(g, a, |s| s != b && c.is_occupied(s), None);
    let interior: Vec<u64> = region.sites().iter().copied().filter(|&s| s != b && c.is_occupied(s)).collect();
    let index: FxHashMap<u64, usize> = interior.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let k = interior.len();
    let (src, sink) = (2 * k, 2 * k + 1);
    let mut net = Network::new(2 * k + 2);
    for (i, &s) in interior.iter().enumerate() {
        net.add(2 * i, 2 * i + 1, 1, 0);
        for n in g.neighbor_sites(s) {
            if n == a {
                net.add(src, 2 * i, 1, 1);
            } else if n == b {
                net.add(2 * i + 1, sink, 1, 1);
            } else if let Some(&j) = index.get(&n) {
                net.add(2 * i + 1, 2 * j, 1, 1);
            }
        }
    }
    if g.neighbor_sites(a).any(|n| n == b) {
        net.add(src, sink, 1, 1);
    }
    let first = net.augment(src, sink)?;
    let second = net.augment(src, sink)?;
    Some((first + second) as u32)
}

/// `a <=> b`: two connections with disjoint sets of occupied interior
/// vertices. Always true for neighbours, never for `a == b`.
pub fn double_connected<C: Occupancy>(c: &C, a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    if c.geometry().neighbor_sites(a).any(|n| n == b) {
        return true;
    }
    shortest_cycle_length(c, a, b).is_some()
}
