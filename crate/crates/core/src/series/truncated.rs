use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Rational, SeriesError};
use crate::json::BigNum;

/// Expansion variable of a [`TruncatedSeries`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    /// `t = 1/(2d)`
    T,
    /// `s = 1/(2d - 1)`
    S,
}

impl Variable {
    pub fn symbol(self) -> &'static str {
        match self {
            Variable::T => "t",
            Variable::S => "s",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Power series `c_0 + c_1 x + ... + c_M x^M + O(x^{M+1})` with exact rational
/// coefficients. The coefficient vector always has length `M + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    variable: Variable,
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series of order `coefficients.len() - 1`. Panics on an empty list.
    pub fn new(variable: Variable, coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "a series needs at least one coefficient");
        TruncatedSeries { variable, coefficients }
    }

    /// Series with the given leading coefficients, zero-padded up to `order`.
    pub fn from_coefficients(variable: Variable, coefficients: &[Rational], order: usize) -> Self {
        let mut c = vec![Rational::zero(); order + 1];
        for (slot, value) in c.iter_mut().zip(coefficients) {
            *slot = value.clone();
        }
        TruncatedSeries::new(variable, c)
    }

    pub fn from_integers(variable: Variable, coefficients: &[i64]) -> Self {
        let c = coefficients.iter().map(|&n| Rational::from_integer(BigInt::from(n))).collect();
        TruncatedSeries::new(variable, c)
    }

    pub fn zero(variable: Variable, order: usize) -> Self {
        TruncatedSeries::new(variable, vec![Rational::zero(); order + 1])
    }

    pub fn one(variable: Variable, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(variable, order);
        s.coefficients[0] = Rational::one();
        s
    }

    /// The series `x` itself (the expansion variable), known through `order`.
    pub fn variable_series(variable: Variable, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(variable, order);
        if order >= 1 {
            s.coefficients[1] = Rational::one();
        }
        s
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Option<&Rational> {
        self.coefficients.get(k)
    }

    /// Drop every coefficient above `order` (no-op if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        TruncatedSeries::new(self.variable, self.coefficients[..keep].to_vec())
    }

    fn check_tag(&self, other: &Self) -> Result<(), SeriesError> {
        if self.variable != other.variable {
            return Err(SeriesError::TagMismatch(self.variable, other.variable));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_tag(other)?;
        let order = self.order().min(other.order());
        let c = (0..=order).map(|k| &self.coefficients[k] + &other.coefficients[k]).collect();
        Ok(TruncatedSeries::new(self.variable, c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries::new(self.variable, self.coefficients.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TruncatedSeries::new(self.variable, self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_tag(other)?;
        let order = self.order().min(other.order());
        let mut c = vec![Rational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                c[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries::new(self.variable, c))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = TruncatedSeries::one(self.variable, self.order());
        for _ in 0..exponent {
            acc = acc.mul(self).expect("same variable");
        }
        acc
    }

    /// Multiplicative inverse through the same order.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coefficients[0];
        if a0.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let order = self.order();
        let inv_a0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(order + 1);
        b.push(inv_a0.clone());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coefficients[k] * &b[n - k];
            }
            b.push(-acc * &inv_a0);
        }
        Ok(TruncatedSeries::new(self.variable, b))
    }

    /// Multiply by the expansion variable. The result is known one order further.
    pub fn shift(&self) -> Self {
        let mut c = Vec::with_capacity(self.coefficients.len() + 1);
        c.push(Rational::zero());
        c.extend(self.coefficients.iter().cloned());
        TruncatedSeries::new(self.variable, c)
    }

    /// Compose `self(inner)` where `inner` has zero constant term. The result
    /// carries `inner`'s variable and order `min(self.order(), inner.order())`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coefficients[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: c_0 + inner*(c_1 + inner*(c_2 + ...))
        let mut acc = TruncatedSeries::zero(inner.variable, order);
        for c in self.coefficients[..=order].iter().rev() {
            acc = acc.mul(&inner)?;
            acc.coefficients[0] += c;
        }
        Ok(acc)
    }

    /// Rewrite a series in `s = 1/(2d - 1)` as a series in `t = 1/(2d)`
    /// via `s = t / (1 - t)`.
    pub fn substitute_sigma_to_2d(&self) -> Result<Self, SeriesError> {
        if self.variable != Variable::S {
            return Err(SeriesError::WrongVariable { expected: Variable::S, found: self.variable });
        }
        if !self.coefficients[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let order = self.order();
        let geometric: Vec<Rational> =
            (0..=order).map(|k| if k == 0 { Rational::zero() } else { Rational::one() }).collect();
        self.compose(&TruncatedSeries::new(Variable::T, geometric))
    }

    /// Inverse change of variable, `t = s / (1 + s)`.
    pub fn substitute_2d_to_sigma(&self) -> Result<Self, SeriesError> {
        if self.variable != Variable::T {
            return Err(SeriesError::WrongVariable { expected: Variable::T, found: self.variable });
        }
        if !self.coefficients[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let order = self.order();
        let alternating: Vec<Rational> = (0..=order)
            .map(|k| match k {
                0 => Rational::zero(),
                k if k % 2 == 1 => Rational::one(),
                _ => -Rational::one(),
            })
            .collect();
        self.compose(&TruncatedSeries::new(Variable::S, alternating))
    }

    /// Exact value of the truncated polynomial at dimension `d`
    /// (`t = 1/(2d)`, or `s = 1/(2d - 1)` for `s`-series).
    pub fn evaluate(&self, d: u32) -> Result<Rational, SeriesError> {
        if d == 0 {
            return Err(SeriesError::BadDimension);
        }
        let den = match self.variable {
            Variable::T => 2 * i64::from(d),
            Variable::S => 2 * i64::from(d) - 1,
        };
        let x = Rational::new(BigInt::one(), BigInt::from(den));
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * &x + c;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            variable: self.variable,
            order: self.order(),
            coefficients: self
                .coefficients
                .iter()
                .map(|c| [BigNum(c.numer().clone()), BigNum(c.denom().clone())])
                .collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self, SeriesError> {
        if json.coefficients.len() != json.order + 1 {
            return Err(SeriesError::Malformed(format!(
                "order {} needs {} coefficients, found {}",
                json.order,
                json.order + 1,
                json.coefficients.len()
            )));
        }
        let mut c = Vec::with_capacity(json.coefficients.len());
        for [num, den] in &json.coefficients {
            if den.0.is_zero() {
                return Err(SeriesError::Malformed("zero denominator".into()));
            }
            c.push(Rational::new(num.0.clone(), den.0.clone()));
        }
        Ok(TruncatedSeries::new(json.variable, c))
    }
}

/// JSON form: `{"variable": "t", "order": M, "coefficients": [[num, den], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub variable: Variable,
    pub order: usize,
    pub coefficients: Vec<[BigNum; 2]>,
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `1 + 5/2*t + 31/4*t^2 + O(t^3)`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.variable.symbol();
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
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
            match k {
                0 => write_rational(f, &magnitude)?,
                _ => {
                    if !magnitude.is_one() {
                        write_rational(f, &magnitude)?;
                        f.write_str("*")?;
                    }
                    f.write_str(x)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({x}^{})", self.order() + 1)
    }
}
