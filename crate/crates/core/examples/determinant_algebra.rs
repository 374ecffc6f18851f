//! Determinants of small matrices over the ring of partials.
//!
//! cargo run --example determinant_algebra

use hyperaut::matrix::{canonical_matrix, det_initiators, det_leibniz, RowOrder};
use hyperaut::{Caps, Hypergraph, Partial, PolyMatrix, Polypartial};

fn main() -> hyperaut::Result<()> {
    let p = |d: &[usize], i: &[usize]| Polypartial::from(Partial::from_indices(d, i).unwrap());
    let a = PolyMatrix::from_rows(vec![
        vec![p(&[0], &[1]), p(&[0], &[0])],
        vec![p(&[1], &[0]), p(&[1], &[2]).add(&p(&[1], &[1]))],
    ])?;
    let b = PolyMatrix::from_rows(vec![
        vec![p(&[2], &[2]), Polypartial::zero()],
        vec![p(&[0, 2], &[2, 0]), Polypartial::one()],
    ])?;

    let da = det_leibniz(&a, 9)?;
    let db = det_leibniz(&b, 9)?;
    println!("det A = {da}");
    println!("det B = {db}");
    println!(
        "det AB = det A det B: {}",
        det_leibniz(&a.matmul(&b)?, 9)? == da.mul(&db)
    );
    println!("det A^T = det A: {}", det_leibniz(&a.transpose(), 9)? == da);
    // Row sums multiply out to the determinant only when distinct columns
    // can never give a common term, which holds for edge-bracket matrices.
    println!(
        "row-sum product = det A: {}",
        det_initiators(&a, &RowOrder::Given) == da
    );
    let path = Hypergraph::from_labels(4, &[&[1, 2], &[2, 3], &[3, 4]])?;
    let c = canonical_matrix(&path, &Caps::default())?;
    println!(
        "row-sum product = det on the canonical matrix of a path: {}",
        det_initiators(&c, &RowOrder::Greedy) == det_leibniz(&c, 9)?
    );
    Ok(())
}
