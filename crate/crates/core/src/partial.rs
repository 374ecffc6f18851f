//! Partial injections and their join calculus.
//!
//! A [`Partial`] is an injective map from a subset of the ground set into the
//! ground set (or into a second, side-tagged ground set). Partials are the
//! monomials of the polypartial ring: the empty partial is the unit, and the
//! product of two partials is their join when they are uniform and zero
//! otherwise.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::Point;
use crate::perm::{factorial, Perm, PermSet};

/// An injective map between finite point sets, stored with the domain in
/// ascending order and the image positionally aligned with it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partial {
    domain: Vec<Point>,
    image: Vec<Point>,
}

impl Partial {
    /// The empty partial (the ring unit).
    pub fn empty() -> Self {
        Partial::default()
    }

    /// Zips `domain` and `image` positionally into a canonical partial.
    pub fn new(domain: Vec<Point>, image: Vec<Point>) -> Result<Self> {
        if domain.len() != image.len() {
            return Err(Error::LengthMismatch {
                domain: domain.len(),
                image: image.len(),
            });
        }
        let mut pairs: Vec<(Point, Point)> = domain.into_iter().zip(image).collect();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateDomain(w[0].0.idx()));
        }
        let mut imgs: Vec<Point> = pairs.iter().map(|p| p.1).collect();
        imgs.sort_unstable();
        if let Some(w) = imgs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateImage(w[0].idx()));
        }
        let (domain, image) = pairs.into_iter().unzip();
        Ok(Partial { domain, image })
    }

    /// Same-side partial from index lists.
    pub fn from_indices(domain: &[usize], image: &[usize]) -> Result<Self> {
        Partial::new(
            domain.iter().map(|&i| Point::new(i)).collect(),
            image.iter().map(|&i| Point::new(i)).collect(),
        )
    }

    /// Isopartial from index lists: left-side domain, right-side image.
    pub fn iso_from_indices(domain: &[usize], image: &[usize]) -> Result<Self> {
        Partial::new(
            domain.iter().map(|&i| Point::new(i)).collect(),
            image.iter().map(|&i| Point::right(i)).collect(),
        )
    }

    /// Builds from already-sorted, known-injective pairs.
    pub(crate) fn from_sorted_pairs(pairs: impl IntoIterator<Item = (Point, Point)>) -> Self {
        let (domain, image): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        debug_assert!(domain.windows(2).all(|w| w[0] < w[1]));
        Partial { domain, image }
    }

    /// Number of pairs (the `p` of a p-partial).
    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn domain(&self) -> &[Point] {
        &self.domain
    }

    pub fn image(&self) -> &[Point] {
        &self.image
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.domain.iter().copied().zip(self.image.iter().copied())
    }

    pub fn get(&self, x: Point) -> Option<Point> {
        self.domain.binary_search(&x).ok().map(|k| self.image[k])
    }

    /// Sorted image set.
    pub fn image_set(&self) -> Vec<Point> {
        let mut v = self.image.clone();
        v.sort_unstable();
        v
    }

    /// Whether the two partials can be joined: they agree on shared domain
    /// points and shared image points have the same preimage.
    pub fn is_uniform(&self, other: &Partial) -> bool {
        self.join(other).is_some()
    }

    /// The minimum common extension, or `None` (the ring zero) when the two
    /// partials collide.
    pub fn join(&self, other: &Partial) -> Option<Partial> {
        if other.is_empty() {
            return Some(self.clone());
        }
        if self.is_empty() {
            return Some(other.clone());
        }
        let mut pairs = Vec::with_capacity(self.len() + other.len());
        let mut a = self.pairs().peekable();
        let mut b = other.pairs().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&(da, ia)), Some(&(db, ib))) => {
                    if da < db {
                        pairs.push((da, ia));
                        a.next();
                    } else if db < da {
                        pairs.push((db, ib));
                        b.next();
                    } else if ia == ib {
                        pairs.push((da, ia));
                        a.next();
                        b.next();
                    } else {
                        return None;
                    }
                }
                (Some(_), None) => {
                    pairs.extend(a);
                    break;
                }
                (None, Some(_)) => {
                    pairs.extend(b);
                    break;
                }
                (None, None) => break,
            }
        }
        // Domains are now distinct, so a repeated image means two different
        // preimages for one point.
        let mut imgs: Vec<Point> = pairs.iter().map(|p| p.1).collect();
        imgs.sort_unstable();
        if imgs.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Partial::from_sorted_pairs(pairs))
    }

    /// Restriction order: `self ≤ other` iff `other` restricts to `self`.
    pub fn leq(&self, other: &Partial) -> bool {
        self.len() <= other.len() && self.pairs().all(|(d, i)| other.get(d) == Some(i))
    }

    /// Whether a full bijection (by index) extends this partial.
    pub fn is_restriction_of(&self, g: &Perm) -> bool {
        self.pairs()
            .all(|(d, i)| d.idx() < g.len() && g.apply(d.idx()) == i.idx())
    }

    /// A deterministic full bijection of `[0, m)` extending this partial.
    ///
    /// Points of `img ∖ dom` are sent to `dom ∖ img` in ascending order; all
    /// other free points are fixed. Works by index, so it also extends an
    /// isopartial to a bijection `X -> Y` when `|X| = |Y| = m`.
    pub fn extend_to_permutation(&self, m: usize) -> Result<Perm> {
        let mut map: Vec<Option<usize>> = vec![None; m];
        let mut in_dom = vec![false; m];
        let mut in_img = vec![false; m];
        for (d, i) in self.pairs() {
            check_range(d.idx(), m)?;
            check_range(i.idx(), m)?;
            map[d.idx()] = Some(i.idx());
            in_dom[d.idx()] = true;
            in_img[i.idx()] = true;
        }
        let img_only = (0..m).filter(|&x| in_img[x] && !in_dom[x]);
        let dom_only = (0..m).filter(|&x| in_dom[x] && !in_img[x]);
        for (from, to) in img_only.zip(dom_only) {
            map[from] = Some(to);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(x, y)| y.unwrap_or(x))
            .collect();
        Perm::from_vec(map)
    }

    /// All bijections of `[0, m)` extending this partial (its class), in
    /// lexicographic order. Errors if the class has more than `cap` members.
    pub fn enumerate_class(&self, m: usize, cap: u128) -> Result<PermSet> {
        let mut base: Vec<Option<u32>> = vec![None; m];
        let mut used = vec![false; m];
        for (d, i) in self.pairs() {
            check_range(d.idx(), m)?;
            check_range(i.idx(), m)?;
            base[d.idx()] = Some(i.index);
            used[i.idx()] = true;
        }
        let free_dom: Vec<usize> = (0..m).filter(|&x| base[x].is_none()).collect();
        let free_img: Vec<u32> = (0..m as u32).filter(|&y| !used[y as usize]).collect();
        let needed = factorial(free_dom.len());
        if needed > cap {
            return Err(Error::ExpansionTooLarge { needed, cap });
        }
        let k = free_img.len();
        Ok(free_img
            .into_iter()
            .permutations(k)
            .map(|choice| {
                let mut map: Vec<u32> = base.iter().map(|x| x.unwrap_or(0)).collect();
                for (&x, y) in free_dom.iter().zip(choice) {
                    map[x] = y;
                }
                Perm::from_raw(map)
            })
            .collect())
    }
}

fn check_range(index: usize, size: usize) -> Result<()> {
    if index >= size {
        Err(Error::PointOutOfRange { index, size })
    } else {
        Ok(())
    }
}

impl fmt::Display for Partial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} // {})",
            self.domain.iter().join(" "),
            self.image.iter().join(" ")
        )
    }
}

/// The involution carrying `a` onto `b`: `a ∖ b` is matched with `b ∖ a` in
/// ascending order (both ways), every other point is fixed.
pub fn transversal(a: &[usize], b: &[usize], m: usize) -> Result<Perm> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let a_sorted: Vec<usize> = a.iter().copied().sorted().dedup().collect();
    let b_sorted: Vec<usize> = b.iter().copied().sorted().dedup().collect();
    if a_sorted.len() != a.len() || b_sorted.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a_sorted.len(),
            right: b_sorted.len(),
        });
    }
    let mut map: Vec<usize> = (0..m).collect();
    let only_a = a_sorted
        .iter()
        .filter(|x| b_sorted.binary_search(x).is_err());
    let only_b = b_sorted
        .iter()
        .filter(|x| a_sorted.binary_search(x).is_err());
    for (&x, &y) in only_a.zip(only_b) {
        check_range(x, m)?;
        check_range(y, m)?;
        map[x] = y;
        map[y] = x;
    }
    Perm::from_vec(map)
}

/// Every same-side partial on `[0, m)`, including the empty one.
pub fn all_partials(m: usize) -> Vec<Partial> {
    let mut out = Vec::new();
    for p in 0..=m {
        for dom in (0..m).combinations(p) {
            for img in (0..m).permutations(p) {
                out.push(Partial::from_indices(&dom, &img).unwrap());
            }
        }
    }
    out
}
