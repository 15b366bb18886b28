use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::EnumerationError;
use crate::lattice::Point;
use crate::series::Rational;

/// Polynomial in `p` with integer coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProbabilityPolynomial {
    coefficients: Vec<BigInt>,
}

impl ProbabilityPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        ProbabilityPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        ProbabilityPolynomial::default()
    }

    /// `p^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        ProbabilityPolynomial { coefficients: c }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        ProbabilityPolynomial::new((0..n).map(|k| self.coefficient(k) + other.coefficient(k)).collect())
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        ProbabilityPolynomial::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, p: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * p + c.to_f64().expect("finite coefficient"))
    }

    pub fn eval_exact(&self, p: &Rational) -> Rational {
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| acc * p + Rational::from_integer(c.clone()))
    }
}

impl fmt::Display for ProbabilityPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            f.write_str(sep)?;
            first = false;
            let m = c.abs();
            if !m.is_one() || k == 0 {
                write!(f, "{m}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("p")?,
                _ => write!(f, "p^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Limits for [`union_occupation_probability`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionBudget {
    /// Distinct sites over all interiors (one bit each).
    pub max_sites: usize,
    /// Distinct interior unions kept during inclusion-exclusion.
    pub max_unions: usize,
}

impl Default for UnionBudget {
    fn default() -> Self {
        UnionBudget { max_sites: 128, max_unions: 1 << 22 }
    }
}

/// Exact `P(some set in `interiors` is fully occupied)` under independent
/// Bernoulli(p) occupation.
///
/// Inclusion-exclusion over subfamilies, with subfamilies sharing the same
/// union of interiors merged into one signed coefficient as they are formed.
pub fn union_occupation_probability(
    interiors: &[BTreeSet<Point>],
    budget: UnionBudget,
) -> Result<ProbabilityPolynomial, EnumerationError> {
    let sites: BTreeSet<&Point> = interiors.iter().flatten().collect();
    let limit = budget.max_sites.min(128);
    if sites.len() > limit {
        return Err(EnumerationError::TooManySites { sites: sites.len(), limit });
    }
    let index: FxHashMap<&Point, usize> = sites.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let masks: Vec<u128> = interiors.iter().map(|set| set.iter().fold(0u128, |m, p| m | (1u128 << index[p]))).collect();

    // signed coefficient of p^{|mask|} accumulated over all subfamilies with that union
    let mut terms: FxHashMap<u128, i128> = FxHashMap::default();
    for &mask in &masks {
        let mut update: Vec<(u128, i128)> = terms.iter().map(|(&m, &c)| (m | mask, -c)).collect();
        update.push((mask, 1));
        for (m, c) in update {
            *terms.entry(m).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        if terms.len() > budget.max_unions {
            return Err(EnumerationError::UnionBudget(budget.max_unions));
        }
    }

    let mut coefficients = vec![BigInt::zero(); sites.len() + 1];
    for (mask, c) in terms {
        coefficients[mask.count_ones() as usize] += BigInt::from(c);
    }
    Ok(ProbabilityPolynomial::new(coefficients))
}
