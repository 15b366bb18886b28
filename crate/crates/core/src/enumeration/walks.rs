use std::collections::BTreeMap;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;

use super::EnumerationError;
use crate::lattice::Point;

/// Default cap on the number of lattice points a walk table may hold.
pub const DEFAULT_WALK_BUDGET: u128 = 4_000_000;

/// `J^{*m}(x)`: number of `m`-step nearest-neighbour walks from the origin to `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    d: usize,
    m: u32,
    counts: BTreeMap<Point, BigUint>,
}

impl WalkTable {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn steps(&self) -> u32 {
        self.m
    }

    /// Zero for points the walks cannot reach.
    pub fn count(&self, x: &Point) -> BigUint {
        self.counts.get(x).cloned().unwrap_or_default()
    }

    /// Points with a nonzero count.
    pub fn support(&self) -> impl Iterator<Item = (&Point, &BigUint)> {
        self.counts.iter()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `D^{*m}(x) = J^{*m}(x) / Ω^m` as a float.
    pub fn normalized(&self, x: &Point) -> f64 {
        let c: f64 = self.count(x).to_string().parse().unwrap_or(f64::NAN);
        c / ((2 * self.d) as f64).powi(self.m as i32)
    }
}

/// Number of points of Z^d with L1 norm at most `r` (Delannoy number).
fn ball_size(d: usize, r: u32) -> u128 {
    let mut total: u128 = 0;
    let mut c_d: u128 = 1; // C(d, k)
    let mut c_r: u128 = 1; // C(r, k)
    for k in 0..=d.min(r as usize) as u128 {
        if let Some(k1) = k.checked_sub(1) {
            c_d = c_d * (d as u128 - k1) / k;
            c_r = c_r * (u128::from(r) - k1) / k;
        }
        total = total.saturating_add((1u128 << k.min(100)).saturating_mul(c_d).saturating_mul(c_r));
    }
    total
}

/// Exact `m`-fold convolution power of the step indicator by dynamic programming.
pub fn walk_counts(d: usize, m: u32, budget: u128) -> Result<WalkTable, EnumerationError> {
    let needed = ball_size(d, m);
    if needed > budget {
        return Err(EnumerationError::WalkBudget { needed, budget });
    }
    // (2d)^m must fit the accumulator; the budget keeps this far away in practice.
    let fits = (2 * d as u128).checked_pow(m).is_some();
    if !fits {
        return Err(EnumerationError::WalkBudget { needed: u128::MAX, budget });
    }
    let mut current: FxHashMap<Vec<i32>, u128> = FxHashMap::default();
    current.insert(vec![0; d], 1);
    for _ in 0..m {
        let mut next: FxHashMap<Vec<i32>, u128> = FxHashMap::default();
        next.reserve(current.len() * 2);
        for (x, &c) in &current {
            let mut y = x.clone();
            for axis in 0..d {
                for delta in [-1, 1] {
                    y[axis] += delta;
                    *next.entry(y.clone()).or_insert(0) += c;
                    y[axis] -= delta;
                }
            }
        }
        current = next;
    }
    let counts = current.into_iter().map(|(x, c)| (Point(x), BigUint::from(c))).collect();
    Ok(WalkTable { d, m, counts })
}
