//! Clusters, double connections and two-point functions against brute-force
//! oracles and exact small-p enumeration.

mod common;

use sitepc::enumeration::{short_cycle_probability, UnionBudget};
use sitepc::percolation::{double_connection, two_point, TwoPointVariant};
use sitepc::{Execution, Point, TorusGeometry};

#[test]
fn union_find_partitions_match_breadth_first_search() {
    common::check_union_find_against_bfs(500).unwrap();
}

#[test]
fn max_flow_double_connection_matches_path_pairs() {
    common::check_double_connection_window().unwrap();
}

#[test]
fn long_chemical_distance_becomes_rarer_with_length() {
    let g = TorusGeometry::new(5, 10).unwrap();
    let x = Point(vec![1, 1, 0, 0, 0]);
    let est: Vec<_> = [2, 4, 6]
        .iter()
        .map(|&l| two_point(&g, 0.1, &x, TwoPointVariant::AtLeast(l), 20_000, 3, Execution::default()))
        .collect();
    assert!(est[0].mean > est[1].mean && est[1].mean > est[2].mean, "{est:?}");
    let plain = two_point(&g, 0.1, &x, TwoPointVariant::Plain, 20_000, 3, Execution::default());
    // every connection to x has at least two edges
    assert_eq!(plain.mean, est[0].mean);
}

#[test]
fn double_connection_at_small_p_matches_short_cycles() {
    let g = TorusGeometry::new(3, 8).unwrap();
    let x = Point(vec![1, 1, 0]);
    let p = 0.05;
    let est = double_connection(&g, p, &x, 200_000, 5, Execution::default());
    // cycles of length 8 or more through x add O(p^6)
    let exact = short_cycle_probability(&x, 6, UnionBudget::default()).unwrap().eval(p);
    assert!(est.within(exact, 3.0, 1000.0 * p.powi(6)), "{est:?} vs {exact}");
}
