//! Square matrices over the ring of partials, the canonical matrices of
//! hypergraphs, and two determinant algorithms.
//!
//! `det_leibniz` sums the products along every permutation of columns.
//! `det_initiators` multiplies the row sums (initiators) instead; on
//! canonical matrices the cross terms of the expanded product all vanish, so
//! both give the same polypartial.

use std::fmt;

use itertools::Itertools;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::ground::{Point, Side};
use crate::hypergraph::Hypergraph;
use crate::partial::Partial;
use crate::polypartial::Polypartial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Polypartial>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![Polypartial::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Polypartial::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polypartial>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: r.len(),
            });
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polypartial {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polypartial) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Polypartial] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = PolyMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Polypartial::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, kappa: &Polypartial) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| kappa.mul(e)).collect(),
        }
    }

    /// Places `blocks` along the diagonal, zeros elsewhere.
    pub fn block_diagonal(blocks: &[PolyMatrix]) -> PolyMatrix {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut out = PolyMatrix::zeros(n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out.set(offset + i, offset + j, b.get(i, j).clone());
                }
            }
            offset += b.n;
        }
        out
    }

    /// Union of term domains along row `i`. For a canonical matrix this is
    /// the row's edge.
    fn row_support(&self, i: usize) -> Vec<Point> {
        self.row(i)
            .iter()
            .flat_map(|e| e.terms())
            .flat_map(|t| t.domain().iter().copied())
            .sorted_unstable()
            .dedup()
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            writeln!(f, "[{}]", self.row(i).iter().join(", "))?;
        }
        Ok(())
    }
}

/// Sum of all bijections `a -> b` as partials. Image points are tagged with
/// `image_side`.
pub fn edge_bracket(
    a: &[usize],
    b: &[usize],
    image_side: Side,
    max_arity: usize,
) -> Result<Polypartial> {
    if a.len() != b.len() {
        return Err(Error::ArityMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let k = a.len();
    if k > max_arity {
        return Err(Error::ArityTooLarge {
            arity: k,
            cap: max_arity,
        });
    }
    let domain: Vec<Point> = a.iter().map(|&x| Point::new(x)).collect();
    let terms = b.iter().copied().permutations(k).map(|img| {
        let image = img.into_iter().map(|y| Point::on(image_side, y)).collect();
        Partial::new(domain.clone(), image).expect("bracket of duplicate-free edges")
    });
    Ok(Polypartial::from_terms(terms))
}

/// Canonical matrix of a homogeneous hypergraph: entry `(i, j)` is the bracket
/// of edge `i` onto edge `j`.
pub fn canonical_matrix(g: &Hypergraph, caps: &Caps) -> Result<PolyMatrix> {
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    cross_matrix(g.edges(), g.edges(), Side::Left, caps)
}

fn cross_matrix(
    rows: &[Vec<usize>],
    cols: &[Vec<usize>],
    side: Side,
    caps: &Caps,
) -> Result<PolyMatrix> {
    let n = rows.len();
    debug_assert_eq!(n, cols.len());
    let mut m = PolyMatrix::zeros(n);
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in cols.iter().enumerate() {
            m.set(i, j, edge_bracket(a, b, side, caps.max_arity)?);
        }
    }
    Ok(m)
}

/// Edge indices in block-matrix row order: sections by ascending size, edge
/// order kept within a section.
pub fn block_row_edges(g: &Hypergraph) -> Vec<usize> {
    g.section_indices().into_values().flatten().collect()
}

/// Per-section canonical matrices, by ascending edge size.
pub fn section_blocks(g: &Hypergraph, caps: &Caps) -> Result<Vec<PolyMatrix>> {
    g.sections()
        .values()
        .map(|s| canonical_matrix(s, caps))
        .collect()
}

/// Block-diagonal canonical matrix of an arbitrary hypergraph.
pub fn block_matrix(g: &Hypergraph, caps: &Caps) -> Result<PolyMatrix> {
    Ok(PolyMatrix::block_diagonal(&section_blocks(g, caps)?))
}

/// Per-section cross blocks from `g1` to `g2`, or `None` when the edge counts
/// per section or the ground set sizes differ (no isomorphism can exist).
///
/// When both graphs share the same ground set the image points stay on the
/// left side, so `transformation_blocks(g, g)` equals `section_blocks(g)`.
pub fn transformation_blocks(
    g1: &Hypergraph,
    g2: &Hypergraph,
    caps: &Caps,
) -> Result<Option<Vec<PolyMatrix>>> {
    if g1.order() != g2.order() || g1.num_edges() != g2.num_edges() {
        return Ok(None);
    }
    let s1 = g1.sections();
    let s2 = g2.sections();
    if s1.len() != s2.len()
        || s1
            .iter()
            .zip(&s2)
            .any(|((k1, a), (k2, b))| k1 != k2 || a.num_edges() != b.num_edges())
    {
        return Ok(None);
    }
    let side = image_side(g1, g2);
    s1.values()
        .zip(s2.values())
        .map(|(a, b)| cross_matrix(a.edges(), b.edges(), side, caps))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Canonical transformation from `g1` to `g2`; `None` stands for the zero
/// outcome (no isomorphism possible).
pub fn canonical_transformation(
    g1: &Hypergraph,
    g2: &Hypergraph,
    caps: &Caps,
) -> Result<Option<PolyMatrix>> {
    Ok(transformation_blocks(g1, g2, caps)?.map(|b| PolyMatrix::block_diagonal(&b)))
}

pub(crate) fn image_side(g1: &Hypergraph, g2: &Hypergraph) -> Side {
    if g1.ground() == g2.ground() {
        Side::Left
    } else {
        Side::Right
    }
}

/// Determinant as the sum over all column permutations of the products along
/// them. Branches whose partial product is already zero are skipped.
pub fn det_leibniz(m: &PolyMatrix, max_dim: usize) -> Result<Polypartial> {
    let n = m.dim();
    if n > max_dim {
        return Err(Error::DimensionTooLarge {
            dim: n,
            cap: max_dim,
        });
    }
    let mut terms = Vec::new();
    let mut used = vec![false; n];
    leibniz_rec(m, 0, &mut used, &Polypartial::one(), &mut terms);
    Ok(Polypartial::from_terms(terms))
}

fn leibniz_rec(
    m: &PolyMatrix,
    row: usize,
    used: &mut [bool],
    acc: &Polypartial,
    out: &mut Vec<Partial>,
) {
    if row == m.dim() {
        out.extend(acc.terms().iter().cloned());
        return;
    }
    for col in 0..m.dim() {
        if used[col] || m.get(row, col).is_zero() {
            continue;
        }
        let next = acc.mul(m.get(row, col));
        if next.is_zero() {
            continue;
        }
        used[col] = true;
        leibniz_rec(m, row + 1, used, &next, out);
        used[col] = false;
    }
}

/// Sum of row `i`.
pub fn initiator(m: &PolyMatrix, i: usize) -> Polypartial {
    m.row(i)
        .iter()
        .fold(Polypartial::zero(), |acc, e| acc.add(e))
}

/// Sum of column `j`.
pub fn terminator(m: &PolyMatrix, j: usize) -> Polypartial {
    (0..m.dim()).fold(Polypartial::zero(), |acc, i| acc.add(m.get(i, j)))
}

/// Order in which initiators are multiplied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum RowOrder {
    /// Greedy vertex overlap, see [`greedy_row_order`].
    #[default]
    Greedy,
    /// Rows in matrix order.
    Given,
    /// An explicit permutation of the rows.
    Explicit(Vec<usize>),
}

/// Start from row 0, then repeatedly take the unprocessed row whose support
/// shares the most points with the support covered so far (lowest index on
/// ties).
pub fn greedy_row_order(m: &PolyMatrix) -> Vec<usize> {
    let n = m.dim();
    if n == 0 {
        return Vec::new();
    }
    let supports: Vec<Vec<Point>> = (0..n).map(|i| m.row_support(i)).collect();
    let mut covered: Vec<Point> = supports[0].clone();
    let mut done = vec![false; n];
    done[0] = true;
    let mut order = vec![0];
    for _ in 1..n {
        let next = (0..n)
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let overlap = supports[i]
                    .iter()
                    .filter(|p| covered.binary_search(p).is_ok())
                    .count();
                (overlap, std::cmp::Reverse(i))
            })
            .unwrap();
        done[next] = true;
        order.push(next);
        covered.extend(supports[next].iter().copied());
        covered.sort_unstable();
        covered.dedup();
    }
    order
}

/// Determinant as the product of all initiators.
///
/// Only meaningful for canonical matrices and canonical transformations
/// (including their block-diagonal assemblies).
pub fn det_initiators(m: &PolyMatrix, order: &RowOrder) -> Polypartial {
    let rows: Vec<usize> = match order {
        RowOrder::Greedy => greedy_row_order(m),
        RowOrder::Given => (0..m.dim()).collect(),
        RowOrder::Explicit(v) => {
            assert!(
                v.iter().copied().sorted().eq(0..m.dim()),
                "explicit row order must be a permutation of the rows"
            );
            v.clone()
        }
    };
    let mut acc = Polypartial::one();
    for i in rows {
        acc = acc.mul(&initiator(m, i));
        if acc.is_zero() {
            break;
        }
    }
    acc
}
