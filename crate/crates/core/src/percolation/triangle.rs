use rustfft::num_complex::Complex;
use rustfft::{FftDirection, FftPlanner};
use serde::Serialize;

use super::rng::site_word;
use super::{reachable, Configuration};
use crate::exec::Execution;
use crate::lattice::TorusGeometry;

/// Translation-averaged estimate of `tau_p` on the whole box.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPointTable {
    pub geometry: TorusGeometry,
    /// `tau(x)` indexed by the site of displacement `x`; `tau(0) = 0`.
    pub tau: Vec<f64>,
    /// Configurations times base points per configuration.
    pub observations: u64,
}

impl TwoPointTable {
    /// Largest `tau` over displacements with some coordinate at `-L/2`,
    /// the sites farthest from the origin along an axis.
    pub fn antipodal_shell_max(&self) -> f64 {
        let g = &self.geometry;
        let half = g.side() / 2;
        (0..g.num_sites())
            .filter(|&s| (0..g.dim()).any(|a| g.raw_coord(s, a) == half))
            .map(|s| self.tau[s as usize])
            .fold(0.0, f64::max)
    }
}

/// Estimate `tau_p` from dense configurations with streams `0..samples`,
/// exploring from `bases` random base points in each.
pub fn two_point_table(
    g: &TorusGeometry,
    p: f64,
    samples: u64,
    bases: u64,
    seed: u64,
    exec: Execution,
) -> TwoPointTable {
    let n = g.num_sites();
    let per_sample = exec.map(samples, |i| {
        let c = Configuration::sample(g, p, seed, i);
        let mut hits = Vec::new();
        for j in 0..bases {
            // words past the last site pick the base points
            let b = site_word(seed, i, n + j) % n;
            hits.extend(reachable(&c, b, None).sites().iter().map(|&z| g.displacement(b, z)));
        }
        hits
    });
    let mut counts = vec![0u64; n as usize];
    for hits in per_sample {
        for h in hits {
            counts[h as usize] += 1;
        }
    }
    let observations = samples * bases;
    let tau = counts.iter().map(|&c| c as f64 / observations as f64).collect();
    TwoPointTable { geometry: g.clone(), tau, observations }
}

fn fft_nd(g: &TorusGeometry, data: &mut [Complex<f64>], direction: FftDirection) {
    let side = g.side() as usize;
    let fft = FftPlanner::new().plan_fft(side, direction);
    let mut line = vec![Complex::new(0.0, 0.0); side];
    let mut stride = 1usize;
    for axis in 0..g.dim() {
        for start in 0..data.len() {
            if g.raw_coord(start as u64, axis) != 0 {
                continue;
            }
            for (k, v) in line.iter_mut().enumerate() {
                *v = data[start + k * stride];
            }
            fft.process(&mut line);
            for (k, v) in line.iter().enumerate() {
                data[start + k * stride] = *v;
            }
        }
        stride *= side;
    }
}

/// Periodic convolution `a * b * c` over the box, by fast transform.
pub fn convolve3(g: &TorusGeometry, a: &[f64], b: &[f64], c: &[f64]) -> Vec<f64> {
    let n = g.num_sites() as usize;
    let transform = |f: &[f64]| {
        let mut v: Vec<Complex<f64>> = f.iter().map(|&x| Complex::new(x, 0.0)).collect();
        fft_nd(g, &mut v, FftDirection::Forward);
        v
    };
    let (fa, fb, fc) = (transform(a), transform(b), transform(c));
    let mut prod: Vec<Complex<f64>> = (0..n).map(|k| fa[k] * fb[k] * fc[k]).collect();
    fft_nd(g, &mut prod, FftDirection::Inverse);
    prod.iter().map(|v| v.re / n as f64).collect()
}

/// Triangle diagrams built from an estimated two-point function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleReport {
    pub p: f64,
    /// `sup_{x != 0} p (tau_bullet * tau * tau)(x)`
    pub bullet: f64,
    /// `sup_{x != 0} p (tau_bullet * tau_circ * tau)(x)`
    pub bullet_circ: f64,
    /// `sup_x (tau_bullet * tau_bullet * tau_circ)(x)`
    pub bullet_bullet_circ: f64,
    pub bullet_at_origin: f64,
    pub bullet_circ_at_origin: f64,
    pub antipodal_tau: f64,
    pub observations: u64,
    pub warning: Option<String>,
}

/// Evaluate the three triangles from `table`, with `tau_circ = delta + tau`
/// and `tau_bullet = delta + p tau`. A warning is attached when `tau` on the
/// antipodal shell exceeds `floor`.
pub fn triangle_diagrams(table: &TwoPointTable, p: f64, floor: f64) -> TriangleReport {
    let g = &table.geometry;
    let tau = &table.tau;
    let delta = |s: usize| if s == 0 { 1.0 } else { 0.0 };
    let circ: Vec<f64> = tau.iter().enumerate().map(|(s, &t)| delta(s) + t).collect();
    let bullet: Vec<f64> = tau.iter().enumerate().map(|(s, &t)| delta(s) + p * t).collect();
    let t_b = convolve3(g, &bullet, tau, tau);
    let t_bc = convolve3(g, &bullet, &circ, tau);
    let t_bbc = convolve3(g, &bullet, &bullet, &circ);
    let sup_nonzero = |v: &[f64], scale: f64| v.iter().skip(1).fold(0.0f64, |m, &x| m.max(scale * x));
    let antipodal_tau = table.antipodal_shell_max();
    let warning = (antipodal_tau > floor)
        .then(|| format!("tau on the antipodal shell is {antipodal_tau:.3e}, above the floor {floor:.1e}; enlarge L"));
    TriangleReport {
        p,
        bullet: sup_nonzero(&t_b, p),
        bullet_circ: sup_nonzero(&t_bc, p),
        bullet_bullet_circ: t_bbc.iter().fold(0.0f64, |m, &x| m.max(x)),
        bullet_at_origin: p * t_b[0],
        bullet_circ_at_origin: p * t_bc[0],
        antipodal_tau,
        observations: table.observations,
        warning,
    }
}
