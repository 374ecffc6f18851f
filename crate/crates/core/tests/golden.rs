//! Familiar structures with known symmetry counts, each confirmed by the oracle.

use hyperaut::group::{aut, AutOptions, DetMethod};
use hyperaut::oracle::{brute_aut, OracleConfig};
use hyperaut::{Error, Hypergraph};
use itertools::Itertools;

fn check(g: &Hypergraph, order: u128) {
    for method in [DetMethod::Initiators, DetMethod::Leibniz] {
        let opts = AutOptions {
            method,
            ..AutOptions::default()
        };
        let r = match aut(g, &opts) {
            Err(Error::DimensionTooLarge { dim, .. }) if method == DetMethod::Leibniz => {
                assert!(dim > 9);
                continue;
            }
            other => other.unwrap(),
        };
        assert_eq!(r.order, order, "{method:?}");
        assert_eq!(
            r.elements(u128::MAX).unwrap(),
            brute_aut(g, &OracleConfig::default()).unwrap()
        );
    }
}

fn complete(m: usize, k: usize) -> Hypergraph {
    let edges = (0..m).combinations(k).collect();
    Hypergraph::new(hyperaut::GroundSet::numbered(m), edges).unwrap()
}

#[test]
fn complete_graphs_and_hypergraphs() {
    check(&complete(4, 2), 24);
    check(&complete(5, 2), 120);
    check(&complete(5, 3), 120);
    check(&complete(6, 1), 720);
}

#[test]
fn cycle_on_five() {
    let c5 = Hypergraph::from_labels(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]).unwrap();
    check(&c5, 10);
}

#[test]
fn complete_bipartite_three_three() {
    let edges: Vec<Vec<usize>> = (0..3)
        .cartesian_product(3..6)
        .map(|(a, b)| vec![a, b])
        .collect();
    let k33 = Hypergraph::new(hyperaut::GroundSet::numbered(6), edges).unwrap();
    check(&k33, 72);
}

#[test]
fn fano_plane() {
    let lines: [&[i64]; 7] = [
        &[1, 2, 3],
        &[1, 4, 5],
        &[1, 6, 7],
        &[2, 4, 6],
        &[2, 5, 7],
        &[3, 4, 7],
        &[3, 5, 6],
    ];
    check(&Hypergraph::from_labels(7, &lines).unwrap(), 168);
}

#[test]
fn star_with_a_loop_section() {
    // A star whose centre is also marked by a singleton edge.
    let g = Hypergraph::from_labels(5, &[&[1], &[1, 2], &[1, 3], &[1, 4], &[1, 5]]).unwrap();
    check(&g, 24);
}
