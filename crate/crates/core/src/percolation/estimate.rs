use serde::{Deserialize, Serialize};

/// Monte Carlo mean with its standard error.
///
/// `stderr` is the sample standard deviation (denominator `n - 1`) over
/// `sqrt(n)`; it is NaN for a single sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub n: u64,
}

impl Estimate {
    /// Fold the samples in the given order. Callers pass samples in sample-index
    /// order, which makes the result independent of how they were computed.
    pub fn from_samples(samples: impl IntoIterator<Item = f64>) -> Self {
        let mut acc = Accumulator::new();
        for x in samples {
            acc.push(x);
        }
        acc.estimate()
    }

    /// `|mean - target| <= k * stderr + slack`
    pub fn within(&self, target: f64, k: f64, slack: f64) -> bool {
        (self.mean - target).abs() <= k * self.stderr + slack
    }
}

/// Running count, mean and sum of squared deviations (Welford), mergeable
/// with Chan's pairwise formula.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Accumulator {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&self, other: &Accumulator) -> Accumulator {
        if self.n == 0 {
            return *other;
        }
        if other.n == 0 {
            return *self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let mean = self.mean + delta * other.n as f64 / n as f64;
        let m2 = self.m2 + other.m2 + delta * delta * (self.n as f64 * other.n as f64) / n as f64;
        Accumulator { n, mean, m2 }
    }

    pub fn count(&self) -> u64 {
        self.n
    }

    pub fn estimate(&self) -> Estimate {
        assert!(self.n >= 1, "an estimate needs at least one sample");
        let stderr =
            if self.n > 1 { (self.m2 / (self.n - 1) as f64).sqrt() / (self.n as f64).sqrt() } else { f64::NAN };
        Estimate { mean: self.mean, stderr, n: self.n }
    }
}
