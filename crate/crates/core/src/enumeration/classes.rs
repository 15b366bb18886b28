use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::EnumerationError;
use crate::lattice::ball;

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Compositions of `n` into exactly `k` parts, each in `1..=max_part`.
fn bounded_compositions(n: u32, k: u32, max_part: u32) -> BigUint {
    // ways[s] = compositions of s into the parts placed so far
    let n = n as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); n + 1];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for part in 1..=max_part as usize {
                if s + part > n {
                    break;
                }
                next[s + part] += w;
            }
        }
        ways = next;
    }
    std::mem::take(&mut ways[n])
}

/// Points of Z^d with `|x|_1 = l1` and `|x|_inf = linf`, counted by choosing
/// the support, the signs and a composition of `l1` with largest part `linf`.
pub fn class_count_by_formula(d: usize, l1: u32, linf: u32) -> Result<BigUint, EnumerationError> {
    if linf > l1 {
        return Err(EnumerationError::BadNorms { l1, linf });
    }
    if l1 == 0 {
        return Ok(BigUint::one());
    }
    if linf == 0 {
        return Ok(BigUint::zero());
    }
    let mut total = BigUint::zero();
    for k in 1..=(d as u32).min(l1) {
        let exact_max = bounded_compositions(l1, k, linf) - bounded_compositions(l1, k, linf - 1);
        total += binomial(d as u64, u64::from(k)) * (BigUint::one() << k) * exact_max;
    }
    Ok(total)
}

/// Same count by scanning the L1 ball.
pub fn class_count_by_enumeration(d: usize, l1: u32, linf: u32) -> Result<BigUint, EnumerationError> {
    if linf > l1 {
        return Err(EnumerationError::BadNorms { l1, linf });
    }
    let n = ball(d, l1).into_iter().filter(|x| x.l1_norm() == l1 && x.linf_norm() == linf).count();
    Ok(BigUint::from(n))
}

/// Number of lattice points in a norm class. Uses the closed formula; the
/// enumeration path is kept as an independent check.
pub fn class_count(d: usize, l1: u32, linf: u32) -> Result<BigUint, EnumerationError> {
    class_count_by_formula(d, l1, linf)
}
