//! Automorphism groups, isomorphism sets and the group structure around them:
//! edge stabilizers and their cosets, the kernel of the action on edges, and
//! the induced permutation of edges.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::ground::Point;
use crate::hypergraph::Hypergraph;
use crate::matrix::{
    det_initiators, det_leibniz, image_side, section_blocks, transformation_blocks, PolyMatrix,
    RowOrder,
};
use crate::partial::transversal;
use crate::perm::{factorial, Perm, PermSet};
use crate::polypartial::Polypartial;

/// Determinant engine.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DetMethod {
    #[default]
    Initiators,
    Leibniz,
}

#[derive(Debug, Clone, Default)]
pub struct AutOptions {
    pub caps: Caps,
    pub method: DetMethod,
    pub row_order: RowOrder,
}

/// Structure of the kernel: permutations fixing every edge setwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelInfo {
    /// Radical edges, for graphs only.
    pub radicals: Option<Vec<usize>>,
    /// Maximal sets of points lying in exactly the same edges (size ≥ 2).
    /// The kernel is the direct product of their symmetric groups.
    pub classes: Vec<Vec<usize>>,
    pub order: u128,
}

#[derive(Debug, Clone)]
pub struct AutResult {
    pub determinant: Polypartial,
    pub singular: Vec<usize>,
    pub order: u128,
    pub kernel: KernelInfo,
    ground_size: usize,
}

impl AutResult {
    /// Expands the determinant into the explicit group.
    pub fn elements(&self, cap: u128) -> Result<PermSet> {
        check_cap(self.order, cap)?;
        self.determinant.eval(self.ground_size, cap)
    }
}

#[derive(Debug, Clone)]
pub struct IsoResult {
    pub determinant: Polypartial,
    pub order: u128,
    ground_size: usize,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        self.order > 0
    }

    /// All isomorphisms as index maps `X -> Y`.
    pub fn bijections(&self, cap: u128) -> Result<PermSet> {
        check_cap(self.order, cap)?;
        self.determinant.eval(self.ground_size, cap)
    }
}

fn check_cap(needed: u128, cap: u128) -> Result<()> {
    if needed > cap {
        Err(Error::ExpansionTooLarge { needed, cap })
    } else {
        Ok(())
    }
}

fn determinant_of_blocks(blocks: &[PolyMatrix], opts: &AutOptions) -> Result<Polypartial> {
    match opts.method {
        DetMethod::Initiators => Ok(det_initiators(
            &PolyMatrix::block_diagonal(blocks),
            &opts.row_order,
        )),
        DetMethod::Leibniz => blocks.iter().try_fold(Polypartial::one(), |acc, b| {
            Ok(acc.mul(&det_leibniz(b, opts.caps.max_leibniz_dim)?))
        }),
    }
}

fn assert_domains(det: &Polypartial, singular: &[usize]) {
    let expected: Vec<Point> = singular.iter().map(|&x| Point::new(x)).collect();
    assert!(
        det.terms()
            .iter()
            .all(|t| t.domain() == expected.as_slice()),
        "determinant term with domain other than the singular set"
    );
}

/// Automorphism group of `g` as the determinant of its block canonical matrix.
pub fn aut(g: &Hypergraph, opts: &AutOptions) -> Result<AutResult> {
    let blocks = section_blocks(g, &opts.caps)?;
    let determinant = determinant_of_blocks(&blocks, opts)?;
    let singular = g.singular_set();
    assert_domains(&determinant, &singular);
    let order = determinant.order(singular.len(), g.order())?;
    Ok(AutResult {
        determinant,
        singular,
        order,
        kernel: kernel_info(g),
        ground_size: g.order(),
    })
}

/// Isomorphisms from `g1` to `g2` as the determinant of the canonical
/// transformation.
pub fn iso(g1: &Hypergraph, g2: &Hypergraph, opts: &AutOptions) -> Result<IsoResult> {
    let determinant = match transformation_blocks(g1, g2, &opts.caps)? {
        None => Polypartial::zero(),
        Some(blocks) => determinant_of_blocks(&blocks, opts)?,
    };
    let singular = g1.singular_set();
    assert_domains(&determinant, &singular);
    debug_assert!(determinant
        .terms()
        .iter()
        .all(|t| t.image().iter().all(|p| p.side == image_side(g1, g2))));
    let order = determinant.order(singular.len(), g1.order())?;
    Ok(IsoResult {
        determinant,
        order,
        ground_size: g1.order(),
    })
}

/// Graph edges whose two endpoints both have degree 1.
pub fn radicals(g: &Hypergraph) -> Result<Vec<usize>> {
    if let Some(e) = g.edges().iter().find(|e| e.len() != 2) {
        return Err(Error::NotAGraph(e.len()));
    }
    let deg = g.degrees();
    Ok((0..g.num_edges())
        .filter(|&i| g.edge(i).iter().all(|&v| deg[v] == 1))
        .collect())
}

/// Points grouped by the exact set of edges containing them; singletons
/// dropped. Free points form one class.
pub fn membership_classes(g: &Hypergraph) -> Vec<Vec<usize>> {
    let mut by_sig: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        let sig: Vec<usize> = (0..g.num_edges())
            .filter(|&i| g.edge(i).binary_search(&v).is_ok())
            .collect();
        by_sig.entry(sig).or_default().push(v);
    }
    by_sig
        .into_values()
        .filter(|c| c.len() > 1)
        .sorted()
        .collect()
}

fn kernel_info(g: &Hypergraph) -> KernelInfo {
    let classes = membership_classes(g);
    let order = classes.iter().map(|c| factorial(c.len())).product();
    KernelInfo {
        radicals: radicals(g).ok(),
        classes,
        order,
    }
}

/// Direct product of the symmetric groups on disjoint `classes`, acting on
/// `[0, m)` and fixing everything else.
pub fn product_of_symmetric_groups(classes: &[Vec<usize>], m: usize, cap: u128) -> Result<PermSet> {
    let needed: u128 = classes.iter().map(|c| factorial(c.len())).product();
    check_cap(needed, cap)?;
    let mut out: Vec<Vec<u32>> = vec![(0..m as u32).collect()];
    for class in classes {
        let mut next = Vec::with_capacity(out.len() * factorial(class.len()) as usize);
        for base in &out {
            for img in class.iter().copied().permutations(class.len()) {
                let mut map = base.clone();
                for (&x, y) in class.iter().zip(img) {
                    map[x] = y as u32;
                }
                next.push(map);
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(Perm::from_raw).collect())
}

/// Kernel from the radicals of a graph: one transposition per radical, times
/// the full symmetric group on the free points.
pub fn kernel_from_radicals(g: &Hypergraph, cap: u128) -> Result<PermSet> {
    let rads = radicals(g)?;
    let singular = g.singular_set();
    let free: Vec<usize> = (0..g.order())
        .filter(|v| singular.binary_search(v).is_err())
        .collect();
    let mut classes: Vec<Vec<usize>> = rads.iter().map(|&i| g.edge(i).to_vec()).collect();
    if free.len() > 1 {
        classes.push(free);
    }
    product_of_symmetric_groups(&classes, g.order(), cap)
}

/// Kernel from membership classes; valid for any hypergraph.
pub fn kernel_by_membership(g: &Hypergraph, cap: u128) -> Result<PermSet> {
    product_of_symmetric_groups(&membership_classes(g), g.order(), cap)
}

/// All permutations fixing every edge setwise. Graphs use the radical
/// construction, other hypergraphs the membership classes.
pub fn kernel(g: &Hypergraph, cap: u128) -> Result<PermSet> {
    match radicals(g) {
        Ok(_) => kernel_from_radicals(g, cap),
        Err(_) => kernel_by_membership(g, cap),
    }
}

/// Setwise stabilizer of `a` in the symmetric group on `[0, m)`.
pub fn stabilizer(a: &[usize], m: usize, cap: u128) -> Result<PermSet> {
    let rest: Vec<usize> = (0..m).filter(|x| !a.contains(x)).collect();
    product_of_symmetric_groups(&[a.to_vec(), rest], m, cap)
}

/// The left coset `σ_ij · G_i`: every permutation carrying edge `i` onto
/// edge `j`.
pub fn coset(g: &Hypergraph, i: usize, j: usize, cap: u128) -> Result<PermSet> {
    let (a, b) = (g.edge(i), g.edge(j));
    if a.len() != b.len() {
        return Err(Error::ArityMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let sigma = transversal(a, b, g.order())?;
    Ok(stabilizer(a, g.order(), cap)?.left_mul(&sigma))
}

/// `⋂_i coset(i, j_i)` for an edge permutation `j`. Empty when `j` pairs edges
/// of different sizes.
pub fn coset_intersection(g: &Hypergraph, j: &EdgePermutation, cap: u128) -> Result<PermSet> {
    let mut acc: Option<PermSet> = None;
    for i in 0..g.num_edges() {
        let target = j.0.apply(i);
        if g.edge(i).len() != g.edge(target).len() {
            return Ok(PermSet::new());
        }
        let c = coset(g, i, target, cap)?;
        acc = Some(match acc {
            None => c,
            Some(a) => a.intersection(&c),
        });
        if acc.as_ref().is_some_and(PermSet::is_empty) {
            break;
        }
    }
    match acc {
        Some(a) => Ok(a),
        None => {
            check_cap(factorial(g.order()), cap)?;
            Ok(crate::perm::all_perms(g.order()).collect())
        }
    }
}

/// Automorphisms assembled directly from cosets: `⋂_i ⋃_j coset(i, j)`.
pub fn aut_by_cosets(g: &Hypergraph, cap: u128) -> Result<PermSet> {
    let mut acc: Option<PermSet> = None;
    for i in 0..g.num_edges() {
        let mut row = PermSet::new();
        for j in 0..g.num_edges() {
            if g.edge(i).len() == g.edge(j).len() {
                row = row.union(&coset(g, i, j, cap)?);
            }
        }
        acc = Some(match acc {
            None => row,
            Some(a) => a.intersection(&row),
        });
    }
    match acc {
        Some(a) => Ok(a),
        None => {
            check_cap(factorial(g.order()), cap)?;
            Ok(crate::perm::all_perms(g.order()).collect())
        }
    }
}

/// Permutation induced on edge indices: `A_{ψ(i)} = g(A_i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePermutation(pub Perm);

/// Image of a single automorphism on the edges.
pub fn edge_action(g: &Hypergraph, elem: &Perm) -> Result<EdgePermutation> {
    let index: BTreeMap<&[usize], usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let map = g
        .edges()
        .iter()
        .map(|e| {
            index
                .get(elem.image_of(e).as_slice())
                .copied()
                .ok_or(Error::NotAnAutomorphism)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgePermutation(Perm::from_vec(map)?))
}

/// The induced action of a set of automorphisms on edges, with the fibres.
#[derive(Debug, Clone)]
pub struct QuotientEmbedding {
    pub fibers: BTreeMap<EdgePermutation, PermSet>,
}

impl QuotientEmbedding {
    pub fn image(&self) -> impl Iterator<Item = &EdgePermutation> {
        self.fibers.keys()
    }

    pub fn image_len(&self) -> usize {
        self.fibers.len()
    }

    /// Fibre over the identity edge permutation, i.e. the kernel.
    pub fn kernel(&self) -> Option<&PermSet> {
        self.fibers
            .iter()
            .find(|(k, _)| k.0.is_identity())
            .map(|(_, v)| v)
    }
}

pub fn quotient_embedding(g: &Hypergraph, elements: &PermSet) -> Result<QuotientEmbedding> {
    let mut fibers: BTreeMap<EdgePermutation, PermSet> = BTreeMap::new();
    for elem in elements {
        fibers
            .entry(edge_action(g, elem)?)
            .or_default()
            .insert(elem.clone());
    }
    Ok(QuotientEmbedding { fibers })
}
