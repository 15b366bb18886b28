//! Monte Carlo lace coefficients against exact enumeration at small p.

use num_traits::ToPrimitive;
use sitepc::enumeration::{class_count, short_cycle_pi0_polynomial, UnionBudget};
use sitepc::lace::pi_hat_estimate;
use sitepc::{Execution, TorusGeometry};

#[test]
fn square_part_of_pi0_is_class_count_times_p_squared() {
    for (d, samples) in [(3usize, 200_000u64), (5, 100_000)] {
        let p = 0.02;
        let g = TorusGeometry::new(d, 8).unwrap();
        let est = pi_hat_estimate(0, &g, p, samples, 3, 3, Execution::default()).unwrap();
        let squares = est.by_cycle_length.as_ref().unwrap()[0];
        let exact = class_count(d, 2, 1).unwrap().to_f64().unwrap() * p * p;
        assert!(squares.within(exact, 3.0, 0.0), "d={d}: {squares:?} vs {exact}");
        assert_eq!(est.low_norm_max_abs, 0);
    }
}

#[test]
fn pi0_matches_short_cycle_polynomial_at_small_p() {
    let poly = short_cycle_pi0_polynomial(3, 6, UnionBudget::default()).unwrap();
    let g = TorusGeometry::new(3, 8).unwrap();
    for p in [0.01, 0.02] {
        let est = pi_hat_estimate(0, &g, p, 400_000, 19, 3, Execution::default()).unwrap();
        let exact = poly.eval(p);
        assert!(est.estimate.within(exact, 3.0, 0.0), "p={p}: {:?} vs {exact}", est.estimate);
    }
}

#[test]
fn coefficients_are_nonnegative_and_the_second_is_smallest() {
    let d = 8;
    let p = 1.0 / 16.0;
    let g = TorusGeometry::new(d, 10).unwrap();
    let scaled: Vec<f64> = (0..=2)
        .map(|n| {
            let est = pi_hat_estimate(n, &g, p, 1500, 5, 4, Execution::default()).unwrap();
            assert!(est.estimate.mean >= 0.0);
            p * est.estimate.mean
        })
        .collect();
    assert!(scaled[2] < scaled[1], "{scaled:?}");
    assert!(scaled[2] < scaled[0].max(scaled[1]), "{scaled:?}");
}
