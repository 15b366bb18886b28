use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::EnumerationError;
use crate::series::Rational;

/// Polynomial in `Ω = 2d` with rational coefficients (index = power of `Ω`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaPolynomial {
    coefficients: Vec<Rational>,
}

impl OmegaPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(Rational::zero());
        }
        OmegaPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        self.coefficients.last().expect("nonempty")
    }

    pub fn eval(&self, omega: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * omega + c;
        }
        acc
    }

    pub fn eval_at_dimension(&self, d: usize) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(2 * d)))
    }
}

impl fmt::Display for OmegaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let m = c.abs();
            let coeff = if m.is_integer() { m.numer().to_string() } else { format!("{}/{}", m.numer(), m.denom()) };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    f.write_str("Ω")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Reconstruct a count known to be a polynomial of degree `<= degree` in
/// `Ω = 2d`: evaluate at `d_start ..= d_start + degree`, interpolate, and
/// confirm the prediction at the held-out dimension `d_start + degree + 1`.
pub fn polynomial_in_omega<F>(count: F, degree: usize, d_start: usize) -> Result<OmegaPolynomial, EnumerationError>
where
    F: Fn(usize) -> BigInt,
{
    let dims: Vec<usize> = (d_start..=d_start + degree).collect();
    let xs: Vec<Rational> = dims.iter().map(|&d| Rational::from_integer(BigInt::from(2 * d))).collect();
    let ys: Vec<Rational> = dims.iter().map(|&d| Rational::from_integer(count(d))).collect();

    // Newton divided differences, then expand to monomial form.
    let n = xs.len();
    let mut table = ys.clone();
    let mut newton = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
        newton.push(table[level].clone());
    }
    let mut coefficients = vec![Rational::zero(); n];
    // basis holds prod_{j < level} (Ω - x_j) in monomial form
    let mut basis = vec![Rational::one()];
    for (level, a) in newton.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            coefficients[k] += a * b;
        }
        if level + 1 < n {
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xs[level];
            }
            basis = next;
        }
    }
    let poly = OmegaPolynomial::new(coefficients);

    let held_out = d_start + degree + 1;
    let predicted = poly.eval_at_dimension(held_out);
    let actual = Rational::from_integer(count(held_out));
    if predicted != actual {
        return Err(EnumerationError::NotPolynomial {
            degree,
            d: held_out,
            actual: actual.to_string(),
            predicted: predicted.to_string(),
        });
    }
    Ok(poly)
}
