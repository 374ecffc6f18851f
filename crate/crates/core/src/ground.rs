//! Ground sets and points.
//!
//! Vertex labels are interned into dense indices `0..m`. The index order is the
//! ascending label order, so every order-dependent construction in the crate
//! (transversal matching, canonical term order, listing order) can work on
//! plain integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex label. Integers sort numerically and before names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(i64),
    Name(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

impl FromStr for Label {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.parse::<i64>() {
            Ok(i) => Label::Int(i),
            Err(_) => Label::Name(s.to_owned()),
        })
    }
}

impl From<i64> for Label {
    fn from(i: i64) -> Self {
        Label::Int(i)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        s.parse().unwrap()
    }
}

/// A finite, ordered set of labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<Label>,
}

impl GroundSet {
    /// Builds a ground set from labels in any order. Labels are sorted.
    pub fn new<I, L>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        let mut labels: Vec<Label> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].to_string()));
        }
        Ok(GroundSet { labels })
    }

    /// The ground set `{1, ..., m}`.
    pub fn numbered(m: usize) -> Self {
        GroundSet {
            labels: (1..=m as i64).map(Label::Int).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &Label {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Looks up a label given in textual form.
    pub fn index_of_str(&self, s: &str) -> Result<usize> {
        let label: Label = s.parse().unwrap();
        self.index_of(&label)
            .ok_or_else(|| Error::UnknownLabel(s.to_owned()))
    }

    /// Shorthand for indices of integer labels; handy with numbered ground sets.
    pub fn indices_of(&self, labels: &[i64]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|&l| {
                self.index_of(&Label::Int(l))
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect()
    }
}

/// Which ground set a point belongs to. Isomorphism computations tag image
/// points `Right` so that `X` and `Y` stay disjoint inside one partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub side: Side,
    pub index: u32,
}

impl Point {
    pub fn new(index: usize) -> Self {
        Point {
            side: Side::Left,
            index: index as u32,
        }
    }

    pub fn right(index: usize) -> Self {
        Point {
            side: Side::Right,
            index: index as u32,
        }
    }

    pub fn on(side: Side, index: usize) -> Self {
        Point {
            side,
            index: index as u32,
        }
    }

    pub fn idx(self) -> usize {
        self.index as usize
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "{}", self.index),
            Side::Right => write!(f, "{}'", self.index),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_sorted_ints_before_names() {
        let g = GroundSet::new(["b", "10", "2", "a"]).unwrap();
        let shown: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["2", "10", "a", "b"]);
        assert_eq!(g.index_of_str("10").unwrap(), 1);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            GroundSet::new([1i64, 2, 1]),
            Err(Error::DuplicateLabel("1".into()))
        );
    }

    #[test]
    fn unknown_label() {
        let g = GroundSet::numbered(3);
        assert_eq!(g.index_of_str("4"), Err(Error::UnknownLabel("4".into())));
        assert_eq!(g.indices_of(&[3, 1]).unwrap(), vec![2, 0]);
    }
}
