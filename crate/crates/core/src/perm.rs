//! Full permutations (and bijections between equal-size ground sets) in
//! one-line notation, plus explicit finite sets of them.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A bijection `[0, m) -> [0, m)` stored in one-line form: `map[i]` is the
/// image of `i`. For isomorphisms the image indices refer to the second
/// ground set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm {
            map: (0..m as u32).collect(),
        }
    }

    pub fn from_vec(map: Vec<usize>) -> Result<Self> {
        let m = map.len();
        let mut seen = vec![false; m];
        for &x in &map {
            if x >= m {
                return Err(Error::PointOutOfRange { index: x, size: m });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::DuplicateImage(x));
            }
        }
        Ok(Perm {
            map: map.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles over indices.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut map: Vec<usize> = (0..m).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                map[x] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_vec(map)
    }

    pub(crate) fn from_raw(map: Vec<u32>) -> Self {
        Perm { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { map: inv }
    }

    /// Image of a vertex set, sorted.
    pub fn image_of(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of `[0, m)` in lexicographic one-line order.
pub fn all_perms(m: usize) -> impl Iterator<Item = Perm> {
    (0..m as u32).permutations(m).map(Perm::from_raw)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// An explicit set of permutations (or bijections), ordered lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PermSet {
    perms: BTreeSet<Perm>,
}

impl PermSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn insert(&mut self, p: Perm) -> bool {
        self.perms.insert(p)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.perms.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Perm> {
        self.perms.iter()
    }

    /// Toggle membership; used to accumulate symmetric differences.
    pub fn toggle(&mut self, p: Perm) {
        if !self.perms.remove(&p) {
            self.perms.insert(p);
        }
    }

    pub fn intersection(&self, other: &PermSet) -> PermSet {
        self.perms.intersection(&other.perms).cloned().collect()
    }

    pub fn union(&self, other: &PermSet) -> PermSet {
        self.perms.union(&other.perms).cloned().collect()
    }

    pub fn symmetric_difference(&self, other: &PermSet) -> PermSet {
        self.perms
            .symmetric_difference(&other.perms)
            .cloned()
            .collect()
    }

    pub fn is_subset(&self, other: &PermSet) -> bool {
        self.perms.is_subset(&other.perms)
    }

    /// Left translate: `{g ∘ h : h ∈ self}`.
    pub fn left_mul(&self, g: &Perm) -> PermSet {
        self.iter().map(|h| g.compose(h)).collect()
    }

    /// Right translate: `{h ∘ g : h ∈ self}`.
    pub fn right_mul(&self, g: &Perm) -> PermSet {
        self.iter().map(|h| h.compose(g)).collect()
    }

    /// Non-empty, contains the identity, closed under composition and inverse.
    pub fn is_group(&self) -> bool {
        let Some(first) = self.perms.first() else {
            return false;
        };
        if !self.contains(&Perm::identity(first.len())) {
            return false;
        }
        self.iter().all(|a| {
            self.contains(&a.inverse()) && self.iter().all(|b| self.contains(&a.compose(b)))
        })
    }
}

impl FromIterator<Perm> for PermSet {
    fn from_iter<T: IntoIterator<Item = Perm>>(iter: T) -> Self {
        PermSet {
            perms: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for PermSet {
    type Item = Perm;
    type IntoIter = std::collections::btree_set::IntoIter<Perm>;

    fn into_iter(self) -> Self::IntoIter {
        self.perms.into_iter()
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Perm;
    type IntoIter = std::collections::btree_set::Iter<'a, Perm>;

    fn into_iter(self) -> Self::IntoIter {
        self.perms.iter()
    }
}
