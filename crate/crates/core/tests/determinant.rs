mod common;

use common::*;
use hyperaut::matrix::{
    block_matrix, canonical_matrix, canonical_transformation, det_initiators, det_leibniz,
    edge_bracket, greedy_row_order, initiator, section_blocks, terminator, RowOrder,
};
use hyperaut::perm::factorial;
use hyperaut::{Caps, Error, Hypergraph, Partial, PolyMatrix, Polypartial, Side};
use itertools::Itertools;
use proptest::prelude::*;
use rand::Rng;

const DIM: usize = 8;

fn partial_on(m: usize) -> impl Strategy<Value = Partial> {
    let points: Vec<usize> = (0..m).collect();
    proptest::sample::subsequence(points.clone(), 0..=m)
        .prop_flat_map(move |dom| {
            let k = dom.len();
            (
                Just(dom),
                proptest::sample::subsequence(points.clone(), k).prop_shuffle(),
            )
        })
        .prop_map(|(d, i)| Partial::from_indices(&d, &i).unwrap())
}

fn poly_on(m: usize) -> impl Strategy<Value = Polypartial> {
    proptest::collection::vec(partial_on(m), 0..=2).prop_map(Polypartial::from_terms)
}

fn matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    (1usize..=5).prop_flat_map(move |m| {
        proptest::collection::vec(poly_on(m), n * n).prop_map(move |v| {
            PolyMatrix::from_rows(v.chunks(n).map(|c| c.to_vec()).collect()).unwrap()
        })
    })
}

fn det(a: &PolyMatrix) -> Polypartial {
    det_leibniz(a, DIM).unwrap()
}

fn with_row(a: &PolyMatrix, i: usize, row: &[Polypartial]) -> PolyMatrix {
    let mut b = a.clone();
    for (j, v) in row.iter().enumerate() {
        b.set(i, j, v.clone());
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn additive_in_each_row((a, extra) in matrix(3).prop_flat_map(|a| {
        (Just(a), proptest::collection::vec(poly_on(4), 3))
    })) {
        let sum: Vec<Polypartial> = a.row(1).iter().zip(&extra).map(|(x, y)| x.add(y)).collect();
        let lhs = det(&with_row(&a, 1, &sum));
        let rhs = det(&a).add(&det(&with_row(&a, 1, &extra)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn row_swap_leaves_det_unchanged(a in matrix(3)) {
        let swapped = with_row(&with_row(&a, 0, a.row(2)), 2, a.row(0));
        prop_assert_eq!(det(&swapped), det(&a));
    }

    #[test]
    fn block_diagonal_det_is_product((a, b) in (matrix(2), matrix(3))) {
        let d = PolyMatrix::block_diagonal(&[a.clone(), b.clone()]);
        prop_assert_eq!(det(&d), det(&a).mul(&det(&b)));
    }

    #[test]
    fn greedy_order_is_a_permutation(a in matrix(4)) {
        let mut o = greedy_row_order(&a);
        prop_assert_eq!(o[0], 0);
        o.sort();
        prop_assert_eq!(o, vec![0, 1, 2, 3]);
    }
}

#[test]
fn empty_matrix_has_unit_determinant() {
    let z = PolyMatrix::zeros(0);
    assert!(det(&z).is_one());
    assert!(det_initiators(&z, &RowOrder::Greedy).is_one());
}

#[test]
fn leibniz_dimension_cap() {
    let a = PolyMatrix::identity(10);
    assert_eq!(
        det_leibniz(&a, 9),
        Err(Error::DimensionTooLarge { dim: 10, cap: 9 })
    );
}

#[test]
fn bracket_has_factorial_terms() {
    for k in 1..=4 {
        let a: Vec<usize> = (0..k).collect();
        let b: Vec<usize> = (3..3 + k).collect();
        let br = edge_bracket(&a, &b, Side::Left, 6).unwrap();
        assert_eq!(br.len() as u128, factorial(k));
        assert!(br.terms().iter().all(|t| t.len() == k));
    }
    assert!(matches!(
        edge_bracket(&[0, 1], &[2], Side::Left, 6),
        Err(Error::ArityMismatch { .. })
    ));
    let big: Vec<usize> = (0..7).collect();
    assert!(matches!(
        edge_bracket(&big, &big, Side::Left, 6),
        Err(Error::ArityTooLarge { .. })
    ));
}

#[test]
fn canonical_matrix_is_symmetric_in_support() {
    let g = prism();
    let m = canonical_matrix(&g, &Caps::default()).unwrap();
    for i in 0..m.dim() {
        assert_eq!(m.get(i, i).len(), 2);
        for j in 0..m.dim() {
            assert_eq!(m.get(i, j).len(), m.get(j, i).len());
        }
        // Each edge is its own neighbourhood in both directions.
        assert_eq!(initiator(&m, i).len(), terminator(&m, i).len());
    }
}

#[test]
fn mixed_hypergraphs_need_the_block_matrix() {
    let g = Hypergraph::from_labels(4, &[&[1], &[1, 2], &[2, 3, 4]]).unwrap();
    assert_eq!(
        canonical_matrix(&g, &Caps::default()),
        Err(Error::NotHomogeneous)
    );
    let b = block_matrix(&g, &Caps::default()).unwrap();
    assert_eq!(b.dim(), 3);
    assert_eq!(section_blocks(&g, &Caps::default()).unwrap().len(), 3);
    assert!(b.get(0, 1).is_zero() && b.get(1, 2).is_zero());
}

#[test]
fn every_row_order_agrees_on_small_graphs() {
    let caps = Caps::default();
    for g in all_graphs(4).into_iter().filter(|g| g.num_edges() <= 4) {
        let m = canonical_matrix(&g, &caps).unwrap();
        let reference = det(&m);
        for order in (0..m.dim()).permutations(m.dim()) {
            assert_eq!(det_initiators(&m, &RowOrder::Explicit(order)), reference);
        }
    }
}

#[test]
fn initiators_match_leibniz_on_random_hypergraphs() {
    let caps = Caps::default();
    let mut r = rng(21);
    for _ in 0..60 {
        let k = r.gen_range(1..=3);
        let g = random_uniform(5, k, 0.5, &mut r);
        let blocks = section_blocks(&g, &caps).unwrap();
        for b in blocks.iter().filter(|b| b.dim() <= DIM) {
            assert_eq!(det_initiators(b, &RowOrder::Greedy), det(b));
            assert_eq!(det_initiators(b, &RowOrder::Given), det(b));
        }
    }
}

#[test]
fn transformation_rejects_mismatched_shapes() {
    let caps = Caps::default();
    let p4 = Hypergraph::from_labels(4, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
    let tri = Hypergraph::from_labels(4, &[&[1, 2], &[2, 3]]).unwrap();
    let five = Hypergraph::from_labels(5, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
    let mixed = Hypergraph::from_labels(4, &[&[1, 2], &[2, 3], &[2, 3, 4]]).unwrap();
    assert_eq!(canonical_transformation(&p4, &tri, &caps).unwrap(), None);
    assert_eq!(canonical_transformation(&p4, &five, &caps).unwrap(), None);
    assert_eq!(canonical_transformation(&p4, &mixed, &caps).unwrap(), None);
    let same = canonical_transformation(&p4, &p4, &caps).unwrap().unwrap();
    assert_eq!(same, canonical_matrix(&p4, &caps).unwrap());
}

#[test]
fn evaluation_is_multiplicative_along_initiator_products() {
    let caps = Caps::default();
    let mut r = rng(22);
    for _ in 0..40 {
        let g = random_uniform(5, r.gen_range(1..=3), 0.5, &mut r);
        let m = canonical_matrix(&g, &caps).unwrap();
        let mut running = Polypartial::one();
        for i in greedy_row_order(&m) {
            let row = initiator(&m, i);
            let next = running.mul(&row);
            let lhs = next.eval(5, 1_000).unwrap();
            let rhs = running
                .eval(5, 1_000)
                .unwrap()
                .intersection(&row.eval(5, 1_000).unwrap());
            assert_eq!(lhs, rhs, "{:?}", g.edges());
            running = next;
        }
    }
}
