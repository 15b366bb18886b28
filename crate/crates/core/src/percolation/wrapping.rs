use super::rng::{site_words, word_below};
use super::Estimate;
use crate::exec::Execution;
use crate::lattice::TorusGeometry;

/// Union-find over sites that also tracks each site's unwrapped displacement
/// from its root, so that closing a loop around the torus is detected.
struct WrapFind {
    d: usize,
    parent: Vec<u32>,
    rank: Vec<u8>,
    offset: Vec<i32>,
    /// Per root: bit `a` set when the cluster wraps along axis `a`.
    wraps: Vec<u32>,
    path: Vec<u32>,
}

impl WrapFind {
    fn new(n: usize, d: usize) -> Self {
        WrapFind {
            d,
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            offset: vec![0; n * d],
            wraps: vec![0; n],
            path: Vec::new(),
        }
    }

    fn off(&self, x: u32) -> &[i32] {
        &self.offset[x as usize * self.d..(x as usize + 1) * self.d]
    }

    /// Root of `x`; afterwards `x` points at the root and `off(x)` is its
    /// displacement from it.
    fn find(&mut self, x: u32) -> u32 {
        self.path.clear();
        let mut cur = x;
        while self.parent[cur as usize] != cur {
            self.path.push(cur);
            cur = self.parent[cur as usize];
        }
        let root = cur;
        let d = self.d;
        // the node nearest the root already holds its offset to the root
        for i in (0..self.path.len().saturating_sub(1)).rev() {
            let node = self.path[i] as usize;
            let up = self.path[i + 1] as usize;
            for a in 0..d {
                self.offset[node * d + a] += self.offset[up * d + a];
            }
            self.parent[node] = root;
        }
        root
    }

    /// Record the lattice edge `s -> n` with `pos(n) = pos(s) + delta e_axis`.
    fn link(&mut self, s: u32, n: u32, axis: usize, delta: i32) {
        let rs = self.find(s);
        let os: Vec<i32> = if rs == s { vec![0; self.d] } else { self.off(s).to_vec() };
        let rn = self.find(n);
        let on: Vec<i32> = if rn == n { vec![0; self.d] } else { self.off(n).to_vec() };
        // pos(rn) - pos(rs)
        let mut rel: Vec<i32> = os.iter().zip(&on).map(|(a, b)| a - b).collect();
        rel[axis] += delta;
        if rs == rn {
            for (a, &c) in rel.iter().enumerate() {
                if c != 0 {
                    self.wraps[rs as usize] |= 1 << a;
                }
            }
            return;
        }
        let (hi, lo, sign) = if self.rank[rs as usize] >= self.rank[rn as usize] { (rs, rn, 1) } else { (rn, rs, -1) };
        self.parent[lo as usize] = hi;
        for (a, r) in rel.iter().enumerate() {
            self.offset[lo as usize * self.d + a] = sign * r;
        }
        if self.rank[hi as usize] == self.rank[lo as usize] {
            self.rank[hi as usize] += 1;
        }
        let w = self.wraps[lo as usize];
        self.wraps[hi as usize] |= w;
    }
}

/// Axes whose wrapping defines the sweep threshold: axis 0 only. The
/// any-axis rule reaches a wrap earlier and sits about 0.011 below the
/// known square-lattice value at L = 64.
const THRESHOLD_AXES: u32 = 1;

/// Outcome of one insertion sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSample {
    /// Occupied fraction at the first insertion after which some cluster
    /// wraps along axis 0.
    pub threshold: f64,
    /// Per requested `p`: whether the origin's cluster wraps at that `p`.
    pub theta: Vec<bool>,
}

/// Insert the sites of stream `stream` in increasing order of their random
/// words. The configuration after `k` insertions is exactly the one sampled
/// at any `p` that admits `k` sites, so one sweep serves every `p`.
pub fn wrapping_sweep(g: &TorusGeometry, p_grid: &[f64], seed: u64, stream: u64) -> SweepSample {
    let n = g.num_sites();
    assert!(n <= u64::from(u32::MAX), "box too large for a sweep");
    let words = site_words(seed, stream, n);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by_key(|&i| (words[i as usize], i));
    let sorted: Vec<u64> = order.iter().map(|&i| words[i as usize]).collect();
    let counts: Vec<usize> = p_grid.iter().map(|&p| sorted.partition_point(|&w| word_below(w, p))).collect();
    let last_needed = counts.iter().copied().max().unwrap_or(0);

    let mut uf = WrapFind::new(n as usize, g.dim());
    let mut occupied = vec![false; n as usize];
    let mut theta = vec![false; p_grid.len()];
    let mut threshold = None;
    let origin = g.origin();
    let origin_wraps = |uf: &mut WrapFind, occupied: &[bool]| {
        std::iter::once(origin).chain(g.neighbor_sites(origin)).filter(|&s| occupied[s as usize]).any(|s| {
            let r = uf.find(s as u32);
            uf.wraps[r as usize] != 0
        })
    };
    #[allow(clippy::needless_range_loop)]
    for k in 0..=n as usize {
        for (j, &c) in counts.iter().enumerate() {
            if c == k {
                theta[j] = origin_wraps(&mut uf, &occupied);
            }
        }
        if k == n as usize || (threshold.is_some() && k >= last_needed) {
            break;
        }
        let s = order[k];
        occupied[s as usize] = true;
        for axis in 0..g.dim() {
            for delta in [-1, 1] {
                let t = g.step(u64::from(s), axis, delta) as u32;
                if occupied[t as usize] {
                    uf.link(s, t, axis, delta);
                }
            }
        }
        if threshold.is_none() {
            let r = uf.find(s);
            if uf.wraps[r as usize] & THRESHOLD_AXES != 0 {
                threshold = Some((k + 1) as f64 / n as f64);
            }
        }
    }
    SweepSample { threshold: threshold.unwrap_or(1.0), theta }
}

/// Wrapping-probability estimates on a grid of `p` and the mean wrapping threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaPc {
    pub theta: Vec<(f64, Estimate)>,
    pub pc: Estimate,
}

/// Run `samples` independent sweeps (streams `0..samples`).
pub fn theta_and_pc(g: &TorusGeometry, p_grid: &[f64], samples: u64, seed: u64, exec: Execution) -> ThetaPc {
    assert!(samples >= 1);
    let runs = exec.map(samples, |i| wrapping_sweep(g, p_grid, seed, i));
    let pc = Estimate::from_samples(runs.iter().map(|r| r.threshold));
    let theta = p_grid
        .iter()
        .enumerate()
        .map(|(j, &p)| (p, Estimate::from_samples(runs.iter().map(|r| if r.theta[j] { 1.0 } else { 0.0 }))))
        .collect();
    ThetaPc { theta, pc }
}
