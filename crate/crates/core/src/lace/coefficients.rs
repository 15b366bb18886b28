use serde::Serialize;

use super::{eprime_targets, modified_cluster, ThickenedSet};
use crate::exec::Execution;
use crate::lattice::TorusGeometry;
use crate::percolation::{double_connected, reachable, shortest_cycle_length, Estimate, LazyConfiguration, Occupancy};
use crate::series::{lace_coefficient_inputs, solve_pc_fixed_point};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LaceError {
    #[error("coefficient index {0} is not one of 0, 1, 2")]
    BadIndex(usize),
    #[error("radius {radius} needs a side of at least {needed}, got {side}")]
    RadiusTooLarge { radius: u32, side: u32, needed: u32 },
    #[error("p = {p} is not below the series critical point {pc} for d = {d}")]
    Supercritical { p: f64, pc: f64, d: usize },
    #[error("1 - p (Ω + Π) = {0} is not positive")]
    NonPositiveDenominator(f64),
}

/// Independent configurations `omega_0, omega_1, ...` belonging to one sample.
/// Sample `k` owns streams `4k .. 4k + 4`.
#[derive(Debug)]
pub struct ConfigSequence {
    configs: Vec<LazyConfiguration>,
}

impl ConfigSequence {
    pub const STREAMS_PER_SAMPLE: u64 = 4;

    pub fn new(g: &TorusGeometry, p: f64, seed: u64, sample: u64, len: usize) -> Self {
        assert!(len as u64 <= Self::STREAMS_PER_SAMPLE);
        let configs = (0..len as u64)
            .map(|j| LazyConfiguration::new(g, p, seed, sample * Self::STREAMS_PER_SAMPLE + j))
            .collect();
        ConfigSequence { configs }
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn get(&self, i: usize) -> &LazyConfiguration {
        &self.configs[i]
    }

    pub fn streams(&self) -> Vec<u64> {
        self.configs.iter().map(|c| c.sampling().stream).collect()
    }
}

/// Raw per-sample count behind one coefficient estimate (before the `p^n` factor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PiSample {
    pub count: u64,
    /// `sum_{|x| <= 1} (1{0 <=> x} - J(x))`; only filled for `n = 0`.
    pub low_norm: i64,
    /// For `n = 0`: the count split by shortest-cycle length `<= 4`, `6`, `>= 8`.
    pub by_cycle: [u64; 3],
}

fn check_radius(g: &TorusGeometry, radius: u32) -> Result<(), LaceError> {
    let needed = 2 * radius + 2;
    if g.side() < needed {
        return Err(LaceError::RadiusTooLarge { radius, side: g.side(), needed });
    }
    Ok(())
}

/// One sample of the sum over `x` (and the intermediate points) in `Pi^(n)`.
///
/// * `n = 0`: the number of `x` with `2 <= |x| <= radius` and `0 <=> x` in `omega_0`.
/// * `n >= 1`: `u_0` runs over the sites with `0 <=> u_0` and `|u_0| <= radius`;
///   `u_i` runs over the sites with `E'(u_{i-1}, u_i; C_{i-1})` in `omega_i`,
///   where `C_i` is the modified cluster of `u_{i-1}` without `u_i` in `omega_i`.
pub fn pi_hat_sample(n: usize, g: &TorusGeometry, p: f64, seed: u64, sample: u64, radius: u32) -> PiSample {
    let seq = ConfigSequence::new(g, p, seed, sample, n + 1);
    let w0 = seq.get(0);
    let o = g.origin();
    let mut out = PiSample::default();
    let near: Vec<u64> =
        reachable(w0, o, None).sites().iter().copied().filter(|&x| g.l1_of_site(x) <= radius).collect();
    if n == 0 {
        out.low_norm = i64::from(double_connected(w0, o, o));
        for x in g.neighbor_sites(o) {
            out.low_norm += i64::from(double_connected(w0, o, x)) - 1;
        }
        for &x in &near {
            if g.l1_of_site(x) < 2 {
                continue;
            }
            if let Some(len) = shortest_cycle_length(w0, o, x) {
                out.count += 1;
                out.by_cycle[match len {
                    0..=4 => 0,
                    5..=6 => 1,
                    _ => 2,
                }] += 1;
            }
        }
        return out;
    }
    for &u0 in &near {
        if !double_connected(w0, o, u0) {
            continue;
        }
        let a0 = ThickenedSet::new(g, modified_cluster(w0, o, u0));
        let w1 = seq.get(1);
        let u1s = eprime_targets(w1, u0, &a0);
        if n == 1 {
            out.count += u1s.len() as u64;
            continue;
        }
        let w2 = seq.get(2);
        for u1 in u1s {
            let a1 = ThickenedSet::new(g, modified_cluster(w1, u0, u1));
            out.count += eprime_targets(w2, u1, &a1).len() as u64;
        }
    }
    out
}

/// Estimate of `hat Pi^(n)(0) = sum_x Pi^(n)(x)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiHat {
    pub n: usize,
    pub d: usize,
    pub p: f64,
    pub radius: u32,
    /// `p^n` times the mean raw count.
    pub estimate: Estimate,
    /// Largest `|x| <= 1` contribution seen in any sample (`n = 0` only).
    pub low_norm_max_abs: i64,
    /// For `n = 0`: contributions whose shortest cycle has length `<= 4`, `6`, `>= 8`.
    pub by_cycle_length: Option<[Estimate; 3]>,
}

/// Monte Carlo estimate over samples `0..samples`.
pub fn pi_hat_estimate(
    n: usize,
    g: &TorusGeometry,
    p: f64,
    samples: u64,
    seed: u64,
    radius: u32,
    exec: Execution,
) -> Result<PiHat, LaceError> {
    if n > 2 {
        return Err(LaceError::BadIndex(n));
    }
    check_radius(g, radius)?;
    let raw = exec.map(samples, |i| pi_hat_sample(n, g, p, seed, i, radius));
    let scale = p.powi(n as i32);
    let estimate = Estimate::from_samples(raw.iter().map(|s| scale * s.count as f64));
    let low_norm_max_abs = raw.iter().map(|s| s.low_norm.abs()).max().unwrap_or(0);
    let by_cycle_length =
        (n == 0).then(|| [0, 1, 2].map(|k| Estimate::from_samples(raw.iter().map(|s| s.by_cycle[k] as f64))));
    Ok(PiHat { n, d: g.dim(), p, radius, estimate, low_norm_max_abs, by_cycle_length })
}

/// Both sides of `p tau(0) = (p Ω + p Pi) / (1 - p (Ω + Pi))`, with
/// `Pi = Pi^(0) - Pi^(1) + Pi^(2)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OzeReport {
    pub d: usize,
    pub p: f64,
    /// `p tau(0) = E|C(0)| - 1`
    pub chi: Estimate,
    pub pi: [Estimate; 3],
    pub pi_hat: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// The `1/(2d)` series for `p_c` evaluated at `d`.
pub fn series_pc(d: usize) -> f64 {
    let sol = solve_pc_fixed_point(&lace_coefficient_inputs(), 2).expect("solver inputs are consistent");
    let v = sol.pc.evaluate(d as u32).expect("d >= 1");
    num_traits::ToPrimitive::to_f64(&v).expect("finite")
}

/// Relative residual of the Fourier-space identity at `k = 0`.
pub fn oze_residual(
    g: &TorusGeometry,
    p: f64,
    samples: u64,
    seed: u64,
    radius: u32,
    exec: Execution,
) -> Result<OzeReport, LaceError> {
    let d = g.dim();
    let pc = series_pc(d);
    if p >= pc {
        return Err(LaceError::Supercritical { p, pc, d });
    }
    let pi = [0, 1, 2].map(|n| pi_hat_estimate(n, g, p, samples, seed, radius, exec).map(|r| r.estimate));
    let pi = [pi[0].clone()?, pi[1].clone()?, pi[2].clone()?];
    let sizes = exec.map(samples, |i| {
        let c = LazyConfiguration::new(g, p, seed, i * ConfigSequence::STREAMS_PER_SAMPLE + 3);
        reachable(&c, g.origin(), None).sites().iter().filter(|&&s| c.is_occupied(s)).count() as f64
    });
    let chi = Estimate::from_samples(sizes);
    let omega = 2.0 * d as f64;
    let pi_hat = pi[0].mean - pi[1].mean + pi[2].mean;
    let denominator = 1.0 - p * (omega + pi_hat);
    if denominator <= 0.0 {
        return Err(LaceError::NonPositiveDenominator(denominator));
    }
    let rhs = (p * omega + p * pi_hat) / denominator;
    let lhs = chi.mean;
    let residual = if lhs == 0.0 && rhs == 0.0 { 0.0 } else { (lhs - rhs).abs() / lhs.abs() };
    Ok(OzeReport { d, p, chi, pi, pi_hat, lhs, rhs, residual })
}
