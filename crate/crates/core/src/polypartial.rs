//! The ring of partials: formal sums of partials over F₂.
//!
//! Addition is symmetric difference of term sets, multiplication distributes
//! the join over terms and XOR-accumulates. Every value is kept in normal
//! form (sorted, no repeated term), so structural equality is ring equality.

use std::fmt;
use std::ops::{Add, Mul};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partial::Partial;
use crate::perm::{factorial, PermSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polypartial {
    terms: Vec<Partial>,
}

impl Polypartial {
    pub fn zero() -> Self {
        Polypartial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polypartial {
            terms: vec![Partial::empty()],
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Partial>) -> Self {
        let mut terms: Vec<Partial> = terms.into_iter().collect();
        normalize(&mut terms);
        Polypartial { terms }
    }

    pub fn terms(&self) -> &[Partial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero).
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_empty()
    }

    pub fn add(&self, other: &Polypartial) -> Polypartial {
        let mut terms = Vec::with_capacity(self.len() + other.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    std::cmp::Ordering::Less => terms.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Greater => terms.push(b.next().unwrap().clone()),
                    std::cmp::Ordering::Equal => {
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    terms.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    terms.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Polypartial { terms }
    }

    pub fn mul(&self, other: &Polypartial) -> Polypartial {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for x in &self.terms {
            for y in &other.terms {
                if let Some(j) = x.join(y) {
                    terms.push(j);
                }
            }
        }
        normalize(&mut terms);
        Polypartial { terms }
    }

    /// Multiplies by a single partial.
    pub fn mul_partial(&self, p: &Partial) -> Polypartial {
        let mut terms: Vec<Partial> = self.terms.iter().filter_map(|x| x.join(p)).collect();
        normalize(&mut terms);
        Polypartial { terms }
    }

    /// Evaluates into a set of bijections of `[0, m)`: the symmetric
    /// difference of the classes of all terms.
    pub fn eval(&self, m: usize, cap: u128) -> Result<PermSet> {
        let needed: u128 = self
            .terms
            .iter()
            .map(|t| factorial(m.saturating_sub(t.len())))
            .sum();
        if needed > cap {
            return Err(Error::ExpansionTooLarge { needed, cap });
        }
        let mut out = PermSet::new();
        for t in &self.terms {
            for g in t.enumerate_class(m, cap)? {
                out.toggle(g);
            }
        }
        Ok(out)
    }

    /// Size of the evaluated set when every term has exactly `singular_size`
    /// pairs; such terms have pairwise disjoint classes.
    pub fn order(&self, singular_size: usize, m: usize) -> Result<u128> {
        if self.terms.iter().any(|t| t.len() != singular_size) {
            return Err(Error::MixedDomainSizes);
        }
        Ok(self.terms.len() as u128 * factorial(m - singular_size))
    }
}

/// Sort and cancel equal pairs.
fn normalize(terms: &mut Vec<Partial>) {
    terms.sort_unstable();
    let mut out: Vec<Partial> = Vec::with_capacity(terms.len());
    for t in terms.drain(..) {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    *terms = out;
}

impl From<Partial> for Polypartial {
    fn from(p: Partial) -> Self {
        Polypartial { terms: vec![p] }
    }
}

impl Add for &Polypartial {
    type Output = Polypartial;
    fn add(self, rhs: &Polypartial) -> Polypartial {
        Polypartial::add(self, rhs)
    }
}

impl Mul for &Polypartial {
    type Output = Polypartial;
    fn mul(self, rhs: &Polypartial) -> Polypartial {
        Polypartial::mul(self, rhs)
    }
}

impl fmt::Display for Polypartial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.is_one() {
            return f.write_str("1");
        }
        write!(f, "{}", self.terms.iter().join(" + "))
    }
}
