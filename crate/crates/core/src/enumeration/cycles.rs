use std::collections::{BTreeMap, BTreeSet};

use super::{union_occupation_probability, EnumerationError, ProbabilityPolynomial, UnionBudget};
use crate::lattice::{ball, Point};

/// All self-avoiding cycles of a fixed length through the origin and `base`.
///
/// Each cycle is stored once (rotations and reflections identified) as the
/// vertex sequence `0, ..., base, ..., ` back towards `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFamily {
    base: Point,
    length: usize,
    cycles: Vec<Vec<Point>>,
    interiors: Vec<BTreeSet<Point>>,
}

impl CycleFamily {
    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn cycles(&self) -> &[Vec<Point>] {
        &self.cycles
    }

    /// Per cycle, its vertices other than the origin and `base`.
    pub fn interiors(&self) -> &[BTreeSet<Point>] {
        &self.interiors
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Exact probability that some cycle of the family has every interior site occupied.
    pub fn union_probability(&self, budget: UnionBudget) -> Result<ProbabilityPolynomial, EnumerationError> {
        union_occupation_probability(&self.interiors, budget)
    }
}

/// Self-avoiding nearest-neighbour paths from the origin to `target` with exactly `len` steps.
pub fn self_avoiding_paths(target: &Point, len: usize) -> Vec<Vec<Point>> {
    fn extend(pos: &Point, target: &Point, remaining: usize, path: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if remaining == 0 {
            if pos == target {
                out.push(path.clone());
            }
            return;
        }
        for next in pos.neighbors() {
            // the target may only be entered on the last step
            if next == *target && remaining != 1 {
                continue;
            }
            if next.sub(target).l1_norm() as usize > remaining - 1 || path.contains(&next) {
                continue;
            }
            path.push(next.clone());
            extend(&next, target, remaining - 1, path, out);
            path.pop();
        }
    }
    let origin = Point::origin(target.dim());
    let mut out = Vec::new();
    if (target.l1_norm() as usize) > len || !(len - target.l1_norm() as usize).is_multiple_of(2) {
        return out;
    }
    let mut path = vec![origin.clone()];
    extend(&origin, target, len, &mut path, &mut out);
    out
}

/// Enumerate every self-avoiding cycle of exactly `length` edges that passes
/// through the origin and `x`.
///
/// A cycle through both points splits into two internally disjoint paths
/// from the origin to `x`; the cycles are the unordered pairs of such paths
/// whose lengths add up to `length`.
pub fn enumerate_cycles(x: &Point, length: usize) -> Result<CycleFamily, EnumerationError> {
    if !length.is_multiple_of(2) || !(4..=8).contains(&length) {
        return Err(EnumerationError::BadCycleLength(length));
    }
    if x.is_origin() {
        return Err(EnumerationError::DegenerateBase);
    }
    let dist = x.l1_norm() as usize;
    let mut cycles = Vec::new();
    let mut interiors = Vec::new();
    for short in (dist..=length / 2).filter(|a| (a - dist).is_multiple_of(2)) {
        let long = length - short;
        let shorts = self_avoiding_paths(x, short);
        let longs = if long == short { shorts.clone() } else { self_avoiding_paths(x, long) };
        let inner = |p: &Vec<Point>| -> BTreeSet<Point> { p[1..p.len() - 1].iter().cloned().collect() };
        let short_inner: Vec<BTreeSet<Point>> = shorts.iter().map(inner).collect();
        let long_inner: Vec<BTreeSet<Point>> = longs.iter().map(inner).collect();
        for (i, p) in shorts.iter().enumerate() {
            for (j, q) in longs.iter().enumerate() {
                if short == long && j <= i {
                    continue;
                }
                if !short_inner[i].is_disjoint(&long_inner[j]) {
                    continue;
                }
                let mut cycle = p.clone();
                cycle.extend(q[1..q.len() - 1].iter().rev().cloned());
                interiors.push(short_inner[i].union(&long_inner[j]).cloned().collect());
                cycles.push(cycle);
            }
        }
    }
    Ok(CycleFamily { base: x.clone(), length, cycles, interiors })
}

/// Exact probability that the origin and `x` lie on a common cycle of length
/// at most `max_length` whose interior sites are all occupied.
pub fn short_cycle_probability(
    x: &Point,
    max_length: usize,
    budget: UnionBudget,
) -> Result<ProbabilityPolynomial, EnumerationError> {
    let mut interiors = Vec::new();
    for length in (4..=max_length).step_by(2) {
        interiors.extend(enumerate_cycles(x, length)?.interiors);
    }
    union_occupation_probability(&interiors, budget)
}

/// `sum_{|x| >= 2} P(0 and x on an occupied cycle of length <= max_length)`,
/// the part of the double-connection sum carried by short cycles.
///
/// Points related by a coordinate permutation or sign flip share one
/// polynomial, so each class is enumerated once.
pub fn short_cycle_pi0_polynomial(
    d: usize,
    max_length: usize,
    budget: UnionBudget,
) -> Result<ProbabilityPolynomial, EnumerationError> {
    let mut cache: BTreeMap<Vec<u32>, ProbabilityPolynomial> = BTreeMap::new();
    let mut total = ProbabilityPolynomial::zero();
    for x in ball(d, (max_length / 2) as u32) {
        if x.l1_norm() < 2 {
            continue;
        }
        let mut key: Vec<u32> = x.coords().iter().map(|c| c.unsigned_abs()).collect();
        key.sort_unstable();
        let poly = match cache.get(&key) {
            Some(poly) => poly.clone(),
            None => {
                let poly = short_cycle_probability(&x, max_length, budget)?;
                cache.insert(key, poly.clone());
                poly
            }
        };
        total = total.add(&poly);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: DFS over closed self-avoiding walks from the origin,
    /// keeping those through `x`, canonicalised under rotation and reflection.
    fn brute_force_cycles(x: &Point, length: usize) -> HashSet<Vec<Point>> {
        fn canonical(cycle: &[Point]) -> Vec<Point> {
            let n = cycle.len();
            let mut best: Option<Vec<Point>> = None;
            for start in 0..n {
                for dir in [1isize, -1] {
                    let seq: Vec<Point> = (0..n)
                        .map(|k| cycle[((start as isize + dir * k as isize).rem_euclid(n as isize)) as usize].clone())
                        .collect();
                    if best.as_ref().is_none_or(|b| seq < *b) {
                        best = Some(seq);
                    }
                }
            }
            best.unwrap()
        }
        fn walk(path: &mut Vec<Point>, length: usize, x: &Point, out: &mut HashSet<Vec<Point>>) {
            let last = path.last().unwrap().clone();
            if path.len() == length {
                if last.l1_norm() == 1 && path.contains(x) {
                    out.insert(canonical(path));
                }
                return;
            }
            for next in last.neighbors() {
                if path.contains(&next) || next.l1_norm() as usize > length - path.len() {
                    continue;
                }
                path.push(next);
                walk(path, length, x, out);
                path.pop();
            }
        }
        let mut out = HashSet::new();
        walk(&mut vec![Point::origin(x.dim())], length, x, &mut out);
        out
    }

    fn check_family(f: &CycleFamily) {
        for (cycle, interior) in f.cycles().iter().zip(f.interiors()) {
            assert_eq!(cycle.len(), f.length());
            let distinct: HashSet<&Point> = cycle.iter().collect();
            assert_eq!(distinct.len(), cycle.len());
            for k in 0..cycle.len() {
                let next = &cycle[(k + 1) % cycle.len()];
                assert_eq!(cycle[k].sub(next).l1_norm(), 1);
            }
            assert!(cycle.contains(f.base()) && cycle[0].is_origin());
            assert_eq!(interior.len(), cycle.len() - 2);
        }
    }

    #[test]
    fn square_through_diagonal_point() {
        let x = Point(vec![1, 1, 0, 0]);
        let f = enumerate_cycles(&x, 4).unwrap();
        assert_eq!(f.len(), 1);
        let expected: BTreeSet<Point> = [Point(vec![1, 0, 0, 0]), Point(vec![0, 1, 0, 0])].into();
        assert_eq!(f.interiors()[0], expected);
        check_family(&f);
    }

    #[test]
    fn nine_hexagons_through_the_cube_corner() {
        let f = enumerate_cycles(&Point(vec![1, 1, 1]), 6).unwrap();
        assert_eq!(f.len(), 9);
        check_family(&f);
    }

    #[test]
    fn squares_through_a_neighbour() {
        for d in 2..=5 {
            let mut x = Point::origin(d);
            x.0[0] = 1;
            let f = enumerate_cycles(&x, 4).unwrap();
            assert_eq!(f.len(), 2 * (d - 1));
            assert_eq!(f.len(), brute_force_cycles(&x, 4).len());
        }
    }

    #[test]
    fn matches_brute_force_dfs() {
        for (x, len) in [
            (Point(vec![1, 1, 0]), 6),
            (Point(vec![2, 0, 0]), 6),
            (Point(vec![1, 0, 0]), 6),
            (Point(vec![1, 1]), 8),
            (Point(vec![2, 1, 0]), 6),
            (Point(vec![1, 1, 1]), 8),
        ] {
            let f = enumerate_cycles(&x, len).unwrap();
            check_family(&f);
            assert_eq!(f.len(), brute_force_cycles(&x, len).len(), "x={x} len={len}");
        }
    }

    #[test]
    fn squares_give_half_omega_omega_minus_two_p_squared() {
        for d in 2..=5usize {
            let omega = 2 * d as i64;
            let poly = short_cycle_pi0_polynomial(d, 4, UnionBudget::default()).unwrap();
            assert_eq!(poly, ProbabilityPolynomial::monomial(2).scale(&(omega * (omega - 2) / 2).into()));
        }
    }

    #[test]
    fn short_cycle_probability_of_a_lone_square() {
        let poly = short_cycle_probability(&Point(vec![1, 1]), 4, UnionBudget::default()).unwrap();
        assert_eq!(poly, ProbabilityPolynomial::monomial(2));
        // the cube corner only has hexagons: 9 of them, leading term 9 p^4
        let poly = short_cycle_probability(&Point(vec![1, 1, 1]), 6, UnionBudget::default()).unwrap();
        assert_eq!(poly.coefficient(4), 9.into());
        assert_eq!(poly.degree(), Some(6));
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(enumerate_cycles(&Point(vec![1, 1]), 5), Err(EnumerationError::BadCycleLength(5)));
        assert_eq!(enumerate_cycles(&Point(vec![1, 1]), 10), Err(EnumerationError::BadCycleLength(10)));
        assert_eq!(enumerate_cycles(&Point(vec![0, 0]), 4), Err(EnumerationError::DegenerateBase));
        assert!(enumerate_cycles(&Point(vec![3, 0]), 4).unwrap().is_empty());
    }
}
