//! Hypergraphs over a labelled ground set.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::perm::Perm;

/// A family of distinct non-empty vertex sets over a ground set.
///
/// Edges are stored as ascending index lists and keep their insertion order;
/// that order fixes the rows of every canonical matrix built from the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(ground: GroundSet, edges: Vec<Vec<usize>>) -> Result<Self> {
        let m = ground.len();
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for mut e in edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            e.sort_unstable();
            if let Some(&x) = e.iter().find(|&&x| x >= m) {
                return Err(Error::PointOutOfRange { index: x, size: m });
            }
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge(ground.label(w[0]).to_string()));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge(fmt_set(&ground, &e)));
            }
            normalized.push(e);
        }
        Ok(Hypergraph {
            ground,
            edges: normalized,
        })
    }

    /// Graph on `{1..m}` with edges given by integer labels.
    pub fn from_labels(m: usize, edges: &[&[i64]]) -> Result<Self> {
        let ground = GroundSet::numbered(m);
        let edges = edges
            .iter()
            .map(|e| ground.indices_of(e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(ground, edges)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Size of the ground set.
    pub fn order(&self) -> usize {
        self.ground.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Points lying in some edge, ascending.
    pub fn singular_set(&self) -> Vec<usize> {
        self.edges
            .iter()
            .flatten()
            .copied()
            .sorted_unstable()
            .dedup()
            .collect()
    }

    pub fn is_spanning(&self) -> bool {
        self.singular_set().len() == self.order()
    }

    /// Common edge size, if all edges have the same size. `None` for the
    /// edgeless hypergraph.
    pub fn uniform_arity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.edges.is_empty() || self.uniform_arity().is_some()
    }

    /// Edge indices grouped by edge size, order preserved within each size.
    pub fn section_indices(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            out.entry(e.len()).or_default().push(i);
        }
        out
    }

    /// The k-sections as hypergraphs over the same ground set.
    pub fn sections(&self) -> BTreeMap<usize, Hypergraph> {
        self.section_indices()
            .into_iter()
            .map(|(k, idx)| {
                let edges = idx.iter().map(|&i| self.edges[i].clone()).collect();
                (
                    k,
                    Hypergraph {
                        ground: self.ground.clone(),
                        edges,
                    },
                )
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for &v in self.edges.iter().flatten() {
            deg[v] += 1;
        }
        deg
    }

    /// Index of an edge given as a sorted vertex list.
    pub fn edge_index(&self, sorted_edge: &[usize]) -> Option<usize> {
        self.edges.iter().position(|e| e == sorted_edge)
    }

    /// Whether `g` carries this edge family onto `target`'s edge family.
    /// With `target == self` this is the automorphism test.
    pub fn maps_onto(&self, g: &Perm, target: &Hypergraph) -> bool {
        if self.num_edges() != target.num_edges() || g.len() != self.order() {
            return false;
        }
        let family: BTreeSet<&[usize]> = target.edges.iter().map(Vec::as_slice).collect();
        self.edges
            .iter()
            .all(|e| family.contains(g.image_of(e).as_slice()))
    }

    /// Same edges, renamed by `g` (ground set unchanged).
    pub fn relabel(&self, g: &Perm) -> Hypergraph {
        Hypergraph {
            ground: self.ground.clone(),
            edges: self.edges.iter().map(|e| g.image_of(e)).collect(),
        }
    }

    pub fn fmt_edge(&self, i: usize) -> String {
        fmt_set(&self.ground, &self.edges[i])
    }
}

fn fmt_set(ground: &GroundSet, e: &[usize]) -> String {
    format!("{{{}}}", e.iter().map(|&x| ground.label(x)).join(","))
}
