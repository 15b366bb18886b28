//! Brute-force oracles and exhaustive property checks shared by the
//! integration tests and the acceptance suite. Each check returns a short
//! summary on success and the first counterexample on failure.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use sitepc::enumeration::{polynomial_in_omega, walk_counts, WalkTable, DEFAULT_WALK_BUDGET};
use sitepc::lace::{eprime, pivotal_points, ThickenedSet};
use sitepc::lattice::ball;
use sitepc::percolation::{
    double_connected, label_clusters, long_path_exists, shortest_cycle_length, Configuration, Occupancy,
};
use sitepc::series::Rational;
use sitepc::{Point, TorusGeometry};

/// A finite set of lattice points with neighbour masks, at most 64 points.
pub struct Window {
    pub points: Vec<Point>,
    pub adj: Vec<u64>,
}

impl Window {
    pub fn new(points: Vec<Point>) -> Self {
        assert!(points.len() <= 64);
        let adj = points
            .iter()
            .map(|p| {
                points.iter().enumerate().filter(|(_, q)| p.sub(q).l1_norm() == 1).fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Window { points, adj }
    }

    /// The points and every lattice neighbour of them, core points first.
    pub fn with_boundary(core: &[Point]) -> Self {
        let mut all: Vec<Point> = core.to_vec();
        for p in core {
            for q in p.neighbors() {
                if !all.contains(&q) {
                    all.push(q);
                }
            }
        }
        Window::new(all)
    }

    pub fn index(&self, p: &Point) -> usize {
        self.points.iter().position(|q| q == p).unwrap()
    }

    /// Sites reached from `u`, expanding only through `passable`.
    pub fn reach(&self, u: usize, passable: u64) -> u64 {
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[i];
            }
            next &= !seen;
            seen |= next;
            frontier = next & passable;
        }
        seen
    }

    pub fn connected(&self, u: usize, x: usize, occ: u64) -> bool {
        u != x && self.reach(u, occ) >> x & 1 == 1
    }

    pub fn thicken(&self, a: u64) -> u64 {
        let mut out = a;
        let mut f = a;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            out |= self.adj[i];
        }
        out
    }

    pub fn through(&self, u: usize, x: usize, occ: u64, thick: u64) -> bool {
        self.connected(u, x, occ) && (thick >> x & 1 == 1 || !self.connected(u, x, occ & !thick))
    }

    /// Pivotal points, testing every window site by forcing it both ways.
    pub fn pivotal(&self, u: usize, x: usize, occ: u64) -> u64 {
        let mut out = 0;
        for w in 0..self.points.len() {
            if w == u || w == x {
                continue;
            }
            if self.connected(u, x, occ | 1 << w) && !self.connected(u, x, occ & !(1 << w)) {
                out |= 1 << w;
            }
        }
        out
    }

    pub fn eprime(&self, v: usize, u: usize, occ: u64, thick: u64) -> bool {
        if !self.through(v, u, occ, thick) {
            return false;
        }
        let mut piv = self.pivotal(v, u, occ);
        while piv != 0 {
            let w = piv.trailing_zeros() as usize;
            piv &= piv - 1;
            if self.through(v, w, occ, thick) {
                return false;
            }
        }
        true
    }

    /// Every self-avoiding `u -> v` path with occupied interior, as
    /// `(interior mask, number of edges)`.
    pub fn paths(&self, u: usize, v: usize, occ: u64) -> Vec<(u64, u32)> {
        // the interior is the visited set without `u`
        fn go(w: &Window, at: usize, v: usize, occ: u64, seen: u64, len: u32, out: &mut Vec<(u64, u32)>) {
            let mut nb = w.adj[at];
            while nb != 0 {
                let next = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if next == v {
                    out.push((seen, len + 1));
                } else if occ >> next & 1 == 1 && seen >> next & 1 == 0 {
                    go(w, next, v, occ, seen | 1 << next, len + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        if u != v {
            go(self, u, v, occ, 1 << u, 0, &mut out);
            for path in &mut out {
                path.0 &= !(1 << u);
            }
        }
        out
    }

    /// Shortest cycle through `u` and `v` made of two paths with disjoint
    /// occupied interiors, by trying every pair of distinct paths.
    pub fn shortest_cycle(&self, u: usize, v: usize, occ: u64) -> Option<u32> {
        let paths = self.paths(u, v, occ);
        let mut best = None;
        for (i, a) in paths.iter().enumerate() {
            for b in &paths[i + 1..] {
                if a.0 & b.0 == 0 {
                    let len = a.1 + b.1;
                    best = Some(best.map_or(len, |m: u32| m.min(len)));
                }
            }
        }
        best
    }

    /// Some self-avoiding occupied-interior path `u -> v` with at least `min` edges.
    pub fn long_path(&self, u: usize, v: usize, occ: u64, min: u32) -> bool {
        fn dfs(w: &Window, at: usize, v: usize, occ: u64, seen: u64, len: u32, min: u32) -> bool {
            let mut nb = w.adj[at];
            while nb != 0 {
                let next = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if next == v {
                    if len + 1 >= min {
                        return true;
                    }
                } else if occ >> next & 1 == 1
                    && seen >> next & 1 == 0
                    && dfs(w, next, v, occ, seen | 1 << next, len + 1, min)
                {
                    return true;
                }
            }
            false
        }
        dfs(self, u, v, occ, 1 << u, 0, min)
    }

    pub fn configuration(&self, g: &TorusGeometry, occ: u64) -> Configuration {
        Configuration::from_occupied(
            g,
            (0..self.points.len()).filter(|&i| occ >> i & 1 == 1).map(|i| g.site_index(&self.points[i])),
        )
    }

    fn mask_of<'a>(&self, g: &TorusGeometry, sites: impl IntoIterator<Item = &'a u64>) -> u64 {
        sites.into_iter().fold(0u64, |m, &s| m | 1 << self.index(&g.site_point(s)))
    }
}

/// Points of the box `[0, s_1) x ... x [0, s_d)`.
pub fn boxed(sides: &[i32]) -> Vec<Point> {
    let mut out = vec![Point(vec![])];
    for &s in sides {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..s).map(move |c| {
                    let mut q = p.0.clone();
                    q.push(c);
                    Point(q)
                })
            })
            .collect();
    }
    out
}

/// Component index of every occupied site by breadth-first search.
pub fn bfs_components<C: Occupancy>(c: &C) -> Vec<Option<usize>> {
    let g = c.geometry();
    let n = g.num_sites() as usize;
    let mut comp = vec![None; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s].is_some() || !c.is_occupied(s as u64) {
            continue;
        }
        comp[s] = Some(next);
        let mut queue = VecDeque::from([s as u64]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbor_sites(v) {
                if c.is_occupied(w) && comp[w as usize].is_none() {
                    comp[w as usize] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Cluster labels from union-find induce the same partition as BFS, over
/// `cases` configurations with `d <= 3` and `L <= 16`.
pub fn check_union_find_against_bfs(cases: u64) -> Result<String, String> {
    let shapes = [(1usize, 16u32), (2, 4), (2, 10), (2, 16), (3, 4), (3, 8), (3, 12)];
    for case in 0..cases {
        let (d, side) = shapes[case as usize % shapes.len()];
        let g = TorusGeometry::new(d, side).unwrap();
        let p = 0.1 + 0.8 * ((case * 7) % 17) as f64 / 16.0;
        let c = Configuration::sample(&g, p, 97, case);
        let uf = label_clusters(&c);
        let bfs = bfs_components(&c);
        let mut forward = HashMap::new();
        let mut backward = HashMap::new();
        for (s, (a, b)) in uf.iter().zip(&bfs).enumerate() {
            match (a, b) {
                (None, None) => {}
                (Some(a), Some(b)) => {
                    if *forward.entry(*a).or_insert(*b) != *b || *backward.entry(*b).or_insert(*a) != *a {
                        return Err(format!("case {case} (d={d}, L={side}, p={p}): partitions differ at site {s}"));
                    }
                }
                _ => return Err(format!("case {case}: occupancy disagrees at site {s}")),
            }
        }
    }
    Ok(format!("{cases} configurations"))
}

/// Library pivotal sets equal the force-both-ways test on every occupancy
/// of boxes of at most 18 sites, with the boundary vacant.
pub fn check_pivotal_windows() -> Result<String, String> {
    let mut total = 0u64;
    for (sides, side, u, x) in [
        (vec![4, 4], 8u32, vec![0, 0], vec![3, 3]),
        (vec![4, 4], 8, vec![0, 1], vec![3, 2]),
        (vec![3, 3, 2], 8, vec![0, 0, 0], vec![2, 2, 1]),
    ] {
        let core = boxed(&sides);
        let g = TorusGeometry::new(sides.len(), side).unwrap();
        let w = Window::with_boundary(&core);
        let (ui, xi) = (w.index(&Point(u.clone())), w.index(&Point(x.clone())));
        let (us, xs) = (g.site_index(&Point(u)), g.site_index(&Point(x)));
        let mut nonempty = 0;
        for pattern in 0u64..1 << core.len() {
            let expect = w.pivotal(ui, xi, pattern);
            let got = w.mask_of(&g, pivotal_points(&w.configuration(&g, pattern), us, xs).sites());
            if got != expect {
                return Err(format!("box {sides:?} pattern {pattern:#x}: got {got:#x}, expected {expect:#x}"));
            }
            nonempty += u64::from(expect != 0);
            total += 1;
        }
        if nonempty == 0 {
            return Err(format!("box {sides:?} never has a pivotal point"));
        }
    }
    Ok(format!("{total} window configurations"))
}

/// Max-flow double connection and shortest cycle length equal a search
/// over all pairs of paths, on every occupancy of a 4x4x1 box in d = 3.
pub fn check_double_connection_window() -> Result<String, String> {
    let g = TorusGeometry::new(3, 8).unwrap();
    let core = boxed(&[4, 4, 1]);
    let w = Window::with_boundary(&core);
    let pairs = [([0, 0, 0], [3, 3, 0]), ([1, 0, 0], [2, 3, 0]), ([0, 0, 0], [2, 0, 0]), ([1, 1, 0], [1, 2, 0])];
    let mut positive = 0u64;
    for (u, x) in pairs {
        let (u, x) = (Point(u.to_vec()), Point(x.to_vec()));
        let (ui, xi) = (w.index(&u), w.index(&x));
        let (us, xs) = (g.site_index(&u), g.site_index(&x));
        let adjacent = u.sub(&x).l1_norm() == 1;
        for pattern in 0u64..1 << core.len() {
            let c = w.configuration(&g, pattern);
            let cycle = w.shortest_cycle(ui, xi, pattern);
            let expect = adjacent || cycle.is_some();
            if double_connected(&c, us, xs) != expect {
                return Err(format!("{u} <=> {x}, pattern {pattern:#x}: expected {expect}"));
            }
            let got = shortest_cycle_length(&c, us, xs);
            if got != cycle {
                return Err(format!("{u}, {x}, pattern {pattern:#x}: cycle {got:?}, expected {cycle:?}"));
            }
            positive += u64::from(expect);
        }
    }
    Ok(format!("{} configurations, {positive} doubly connected", pairs.len() << core.len()))
}

/// Every occupancy of the radius-2 ball in d = 3 with `a` the origin and
/// `u`, `v` two of its neighbours, either orthogonal with `t = u + v - a`
/// vacant or opposite so that `t = a`: whenever `E'(u, v; {a})` holds there
/// is an occupied `u`-`v` path of at least four edges.
pub fn check_single_site_eprime_forces_long_path() -> Result<String, String> {
    let g = TorusGeometry::new(3, 6).unwrap();
    let w = Window::new(ball(3, 2));
    let a = w.index(&Point::origin(3));
    let thick = w.thicken(1 << a);
    let a_set = ThickenedSet::new(&g, [g.origin()]);
    let mut holds = 0u64;
    let mut scanned = 0u64;
    for (u, v) in [(vec![1, 0, 0], vec![0, 1, 0]), (vec![1, 0, 0], vec![-1, 0, 0])] {
        let (u, v) = (Point(u), Point(v));
        let t = u.add(&v);
        let (ui, vi, ti) = (w.index(&u), w.index(&v), w.index(&t));
        let free: Vec<usize> = (0..w.points.len()).filter(|&i| i != ui && i != vi && (i != ti || ti == a)).collect();
        let (us, vs) = (g.site_index(&u), g.site_index(&v));
        let mut here = 0u64;
        for bits in 0u64..1 << free.len() {
            scanned += 1;
            let occ = free.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).fold(0u64, |m, (_, &i)| m | 1 << i);
            if !w.eprime(ui, vi, occ, thick) {
                continue;
            }
            here += 1;
            if !w.long_path(ui, vi, occ, 4) {
                return Err(format!("u={u} v={v} occ={occ:#x}: no path of four edges"));
            }
            // the library agrees on a deterministic subset of the positive cases
            if here % 64 == 1 {
                let c = w.configuration(&g, occ);
                if !eprime(&c, us, vs, &a_set) || !long_path_exists(&c, us, vs, 4) {
                    return Err(format!("u={u} v={v} occ={occ:#x}: library disagrees with the window oracle"));
                }
            }
        }
        if here == 0 {
            return Err(format!("u={u} v={v}: the event never occurs"));
        }
        holds += here;
    }
    Ok(format!("{scanned} configurations, {holds} with the event, 0 counterexamples"))
}

pub const WALK_MAX_M: u32 = 8;
pub const WALK_MAX_D: usize = 7;

pub fn walk_tables() -> HashMap<(usize, u32), WalkTable> {
    let mut out = HashMap::new();
    for d in 1..=WALK_MAX_D {
        for m in 0..=WALK_MAX_M {
            out.insert((d, m), walk_counts(d, m, DEFAULT_WALK_BUDGET).unwrap());
        }
    }
    out
}

/// `J^{*m}(x)` vanishes exactly when `|x|_1 > m` or `m - |x|_1` is odd.
pub fn check_walk_parity(tables: &HashMap<(usize, u32), WalkTable>) -> Result<String, String> {
    let mut checked = 0u64;
    for d in 1..=WALK_MAX_D.min(4) {
        for m in 0..=WALK_MAX_M {
            let t = &tables[&(d, m)];
            for x in ball(d, WALK_MAX_M + 2) {
                let n = x.l1_norm();
                if t.count(&x).is_zero() != (n > m || (m - n) % 2 == 1) {
                    return Err(format!("d={d} m={m} x={x}"));
                }
                checked += 1;
            }
        }
    }
    for m in 0..=WALK_MAX_M {
        for (x, c) in tables[&(WALK_MAX_D, m)].support() {
            let n = x.l1_norm();
            if c.is_zero() || n > m || (m - n) % 2 == 1 {
                return Err(format!("d={WALK_MAX_D} m={m} x={x} in the support"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} counts"))
}

/// Sorted non-increasing positive coordinate lists with l1 norm at most `n`.
pub fn shapes(n: u32) -> Vec<Vec<i32>> {
    fn go(rest: i32, cap: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        out.push(cur.clone());
        for c in (1..=cap.min(rest)).rev() {
            cur.push(c);
            go(rest - c, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as i32, n as i32, &mut Vec::new(), &mut out);
    out
}

pub fn embed(shape: &[i32], d: usize) -> Point {
    let mut c = shape.to_vec();
    c.resize(d, 0);
    Point(c)
}

/// Each nonvanishing `J^{*m}(x)` is a polynomial in `2d` of degree exactly
/// `(m - |x|_1) / 2`, with positive leading coefficient at most `m!`,
/// confirmed at a dimension held out of the fit.
pub fn check_walk_omega_degree(tables: &HashMap<(usize, u32), WalkTable>) -> Result<String, String> {
    let mut checked = 0;
    for m in 0..=WALK_MAX_M {
        for shape in shapes(m) {
            let n: u32 = shape.iter().map(|&c| c as u32).sum();
            if (m - n) % 2 == 1 {
                continue;
            }
            let degree = ((m - n) / 2) as usize;
            let d_start = shape.len().max(1);
            if d_start + degree + 1 > WALK_MAX_D {
                continue;
            }
            let count = |d: usize| BigInt::from(tables[&(d, m)].count(&embed(&shape, d)));
            let poly =
                polynomial_in_omega(count, degree, d_start).map_err(|e| format!("m={m} shape={shape:?}: {e}"))?;
            let factorial: BigInt = (1..=m).map(BigInt::from).product();
            let leading = poly.leading();
            if poly.degree() != degree || leading <= &Rational::zero() || leading > &Rational::from_integer(factorial) {
                return Err(format!("m={m} shape={shape:?}: {poly}"));
            }
            checked += 1;
        }
    }
    if checked < 40 {
        return Err(format!("only {checked} shapes checked"));
    }
    Ok(format!("{checked} shapes"))
}

/// Total number of `m`-step walks.
pub fn omega_power(d: usize, m: u32) -> BigUint {
    BigUint::from(2 * d).pow(m)
}
