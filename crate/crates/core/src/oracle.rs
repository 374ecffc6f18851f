//! Brute-force ground truth. Everything here enumerates; nothing prunes.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partial::{all_partials, Partial};
use crate::perm::{all_perms, Perm, PermSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_ground_size: usize,
    pub timeout: Duration,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_ground_size: 8,
            timeout: Duration::from_secs(300),
        }
    }
}

impl OracleConfig {
    /// Hard ceiling on `max_ground_size`.
    pub const LIMIT: usize = 10;

    fn check(&self, m: usize) -> Result<()> {
        let cap = self.max_ground_size.min(Self::LIMIT);
        if m > cap {
            Err(Error::GroundSetTooLarge { size: m, cap })
        } else {
            Ok(())
        }
    }
}

fn filter_all(m: usize, cfg: &OracleConfig, keep: impl Fn(&Perm) -> bool) -> Result<PermSet> {
    cfg.check(m)?;
    let start = Instant::now();
    let mut out = PermSet::new();
    for (n, g) in all_perms(m).enumerate() {
        if n % 4096 == 0 && start.elapsed() > cfg.timeout {
            return Err(Error::OracleTimeout);
        }
        if keep(&g) {
            out.insert(g);
        }
    }
    Ok(out)
}

/// Every permutation of the ground set mapping the edge family onto itself.
pub fn brute_aut(g: &Hypergraph, cfg: &OracleConfig) -> Result<PermSet> {
    filter_all(g.order(), cfg, |p| g.maps_onto(p, g))
}

/// Every bijection (by index) carrying `g1`'s edges onto `g2`'s.
pub fn brute_iso(g1: &Hypergraph, g2: &Hypergraph, cfg: &OracleConfig) -> Result<PermSet> {
    cfg.check(g2.order())?;
    if g1.order() != g2.order() {
        return Ok(PermSet::new());
    }
    filter_all(g1.order(), cfg, |p| g1.maps_onto(p, g2))
}

/// Every permutation fixing each edge setwise (the intersection of the edge
/// stabilizers).
pub fn brute_kernel(g: &Hypergraph, cfg: &OracleConfig) -> Result<PermSet> {
    filter_all(g.order(), cfg, |p| {
        g.edges().iter().all(|e| p.image_of(e) == *e)
    })
}

/// Every permutation carrying edge `i` onto edge `j`.
pub fn brute_coset(g: &Hypergraph, i: usize, j: usize, cfg: &OracleConfig) -> Result<PermSet> {
    filter_all(g.order(), cfg, |p| p.image_of(g.edge(i)) == g.edge(j))
}

/// Minimum common upper bound of two same-side partials on `[0, m)`, found
/// by enumerating every partial. `None` when no upper bound exists.
pub fn brute_join_min(p1: &Partial, p2: &Partial, m: usize) -> Result<Option<Partial>> {
    if m > 6 {
        return Err(Error::GroundSetTooLarge { size: m, cap: 6 });
    }
    let uppers: Vec<Partial> = all_partials(m)
        .into_iter()
        .filter(|q| p1.leq(q) && p2.leq(q))
        .collect();
    Ok(uppers
        .iter()
        .find(|q| uppers.iter().all(|r| q.leq(r)))
        .cloned())
}
