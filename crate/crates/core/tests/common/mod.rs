#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperaut::{GroundSet, Hypergraph, Partial, Perm};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Triangular prism on {1..6}, edges 12 23 13 14 25 36 45 56 46.
pub fn prism() -> Hypergraph {
    Hypergraph::from_labels(
        6,
        &[
            &[1, 2],
            &[2, 3],
            &[1, 3],
            &[1, 4],
            &[2, 5],
            &[3, 6],
            &[4, 5],
            &[5, 6],
            &[4, 6],
        ],
    )
    .unwrap()
}

pub const PRISM_TEXT: &str = "# triangular prism\nvertices: 6\n\
edge: 1 2\nedge: 2 3\nedge: 1 3\nedge: 1 4\nedge: 2 5\nedge: 3 6\nedge: 4 5\nedge: 5 6\nedge: 4 6\n";

/// Partial over a numbered ground set given by labels (label l is index l-1).
pub fn lp(domain: &[usize], image: &[usize]) -> Partial {
    let d: Vec<usize> = domain.iter().map(|x| x - 1).collect();
    let i: Vec<usize> = image.iter().map(|x| x - 1).collect();
    Partial::from_indices(&d, &i).unwrap()
}

/// Permutation from its one-line form over labels 1..m.
pub fn perm_labels(one_line: &[usize]) -> Perm {
    Perm::from_vec(one_line.iter().map(|x| x - 1).collect()).unwrap()
}

/// Every graph on `m` vertices, edge subsets in binary order.
pub fn all_graphs(m: usize) -> Vec<Hypergraph> {
    let pairs: Vec<Vec<usize>> = (0..m).combinations(2).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect();
            Hypergraph::new(GroundSet::numbered(m), edges).unwrap()
        })
        .collect()
}

/// Each k-subset of `[0, m)` is an edge with probability `p`; edge order is shuffled.
pub fn random_uniform(m: usize, k: usize, p: f64, rng: &mut impl Rng) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = (0..m).combinations(k).filter(|_| rng.gen_bool(p)).collect();
    edges.shuffle(rng);
    Hypergraph::new(GroundSet::numbered(m), edges).unwrap()
}

pub fn random_graph(m: usize, p: f64, rng: &mut impl Rng) -> Hypergraph {
    random_uniform(m, 2, p, rng)
}

/// Mixed hypergraph with sections of sizes 1, 2 and 3, interleaved.
pub fn random_mixed(m: usize, rng: &mut impl Rng) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (k, p) in [(1, 0.4), (2, 0.45), (3, 0.3)] {
        edges.extend((0..m).combinations(k).filter(|_| rng.gen_bool(p)));
    }
    edges.shuffle(rng);
    Hypergraph::new(GroundSet::numbered(m), edges).unwrap()
}

/// Random graph with every vertex covered.
pub fn random_spanning_graph(m: usize, p: f64, rng: &mut impl Rng) -> Hypergraph {
    assert!(m >= 2);
    let g = random_graph(m, p, rng);
    let mut edges: Vec<Vec<usize>> = g.edges().to_vec();
    let mut present: BTreeSet<Vec<usize>> = edges.iter().cloned().collect();
    for v in 0..m {
        if edges.iter().any(|e| e.contains(&v)) {
            continue;
        }
        let mut u = rng.gen_range(0..m - 1);
        if u >= v {
            u += 1;
        }
        let e = vec![u.min(v), u.max(v)];
        if present.insert(e.clone()) {
            edges.push(e);
        }
    }
    Hypergraph::new(GroundSet::numbered(m), edges).unwrap()
}

pub fn random_perm(m: usize, rng: &mut impl Rng) -> Perm {
    let mut v: Vec<usize> = (0..m).collect();
    v.shuffle(rng);
    Perm::from_vec(v).unwrap()
}

/// Relabels by a random permutation and shuffles the edge order.
pub fn random_relabel(g: &Hypergraph, rng: &mut impl Rng) -> Hypergraph {
    let p = random_perm(g.order(), rng);
    let mut edges = g.relabel(&p).edges().to_vec();
    edges.shuffle(rng);
    Hypergraph::new(g.ground().clone(), edges).unwrap()
}

/// Degree-preserving double edge swap, if one applies.
pub fn edge_swap(g: &Hypergraph, rng: &mut impl Rng) -> Option<Hypergraph> {
    let n = g.num_edges();
    if n < 2 {
        return None;
    }
    let present: BTreeSet<Vec<usize>> = g.edges().iter().cloned().collect();
    for _ in 0..50 {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let (a, b) = (g.edge(i), g.edge(j));
        if i == j || a.iter().any(|x| b.contains(x)) {
            continue;
        }
        let (x, y) = (a[0], a[1]);
        let (mut u, mut v) = (b[0], b[1]);
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut u, &mut v);
        }
        // x-y, u-v  ->  x-u, y-v
        let e1 = vec![x.min(u), x.max(u)];
        let e2 = vec![y.min(v), y.max(v)];
        if present.contains(&e1) || present.contains(&e2) {
            continue;
        }
        let edges: Vec<Vec<usize>> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i && *k != j)
            .map(|(_, e)| e.clone())
            .chain([e1, e2])
            .collect();
        return Some(Hypergraph::new(g.ground().clone(), edges).unwrap());
    }
    None
}
