use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Rational, TruncatedSeries, Variable};

/// Polynomial `sum c_{a,b} q^a t^b`, trusted only below `t^{error_order}`.
///
/// Holds an expansion such as `1/2 q^2 + 5/2 t + O(t^2)`; zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
    error_order: u32,
}

impl BivariatePoly {
    pub fn new(error_order: u32) -> Self {
        BivariatePoly { terms: BTreeMap::new(), error_order }
    }

    /// Build from `(q_power, t_power, coefficient)` triples; repeated
    /// monomials are summed.
    pub fn from_terms(error_order: u32, terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut p = BivariatePoly::new(error_order);
        for (a, b, c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn add_term(&mut self, q_power: u32, t_power: u32, coefficient: Rational) {
        let slot = self.terms.entry((q_power, t_power)).or_insert_with(Rational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&(q_power, t_power));
        }
    }

    pub fn error_order(&self) -> u32 {
        self.error_order
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute a `t`-series for `q`. The result is known through
    /// `min(q.order(), error_order - 1)`; `None` when `error_order == 0`
    /// (nothing is trusted).
    pub fn substitute(&self, q: &TruncatedSeries) -> Option<TruncatedSeries> {
        debug_assert_eq!(q.variable(), Variable::T);
        if self.error_order == 0 {
            return None;
        }
        let order = q.order().min(self.error_order as usize - 1);
        let q = q.truncate(order);
        let max_q_power = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_q_power as usize + 1);
        powers.push(TruncatedSeries::one(Variable::T, order));
        for k in 1..=max_q_power as usize {
            let next = powers[k - 1].mul(&q).expect("same variable");
            powers.push(next);
        }
        let mut acc = TruncatedSeries::zero(Variable::T, order);
        for (&(a, b), c) in &self.terms {
            let b = b as usize;
            if b > order {
                continue;
            }
            let mut shifted = vec![Rational::zero(); order + 1];
            for (k, coeff) in powers[a as usize].coefficients().iter().enumerate() {
                if k + b <= order {
                    shifted[k + b] = coeff * c;
                }
            }
            acc = acc.add(&TruncatedSeries::new(Variable::T, shifted)).expect("same variable");
        }
        Some(acc)
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let m = c.abs();
            let mut factors = Vec::new();
            if !m.is_one() || (a == 0 && b == 0) {
                factors.push(if m.is_integer() {
                    m.numer().to_string()
                } else {
                    format!("{}/{}", m.numer(), m.denom())
                });
            }
            match a {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{b}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.error_order)
    }
}
