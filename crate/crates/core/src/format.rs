//! The plain-text hypergraph format and label-level printing.
//!
//! ```text
//! # triangular prism
//! vertices: 6
//! edge: 1 2
//! edge: 2 3
//! ```
//!
//! `vertices:` takes either a count `m` (labels `1..m`) or an explicit list of
//! labels. Each `edge:` line lists one or more distinct declared labels.

use std::path::Path;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::hypergraph::Hypergraph;
use crate::partial::Partial;
use crate::perm::Perm;
use crate::polypartial::Polypartial;

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

/// Parses the text format. Errors carry the 1-based line number.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut ground: Option<GroundSet> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (key, rest) = content.split_once(':').ok_or_else(|| Error::Parse {
            line,
            message: format!("expected `key: value`, found `{content}`"),
        })?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "vertices" => {
                if ground.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate `vertices:` line".into(),
                    });
                }
                let g = match fields.as_slice() {
                    [] => GroundSet::numbered(0),
                    [single] => match single.parse::<usize>() {
                        Ok(m) => GroundSet::numbered(m),
                        Err(_) => GroundSet::new([*single]).map_err(|e| at_line(line, e))?,
                    },
                    many => GroundSet::new(many.iter().copied()).map_err(|e| at_line(line, e))?,
                };
                ground = Some(g);
            }
            "edge" => {
                let g = ground.as_ref().ok_or_else(|| Error::Parse {
                    line,
                    message: "`edge:` before `vertices:`".into(),
                })?;
                if fields.is_empty() {
                    return Err(Error::Parse {
                        line,
                        message: "empty edge".into(),
                    });
                }
                let mut e = fields
                    .iter()
                    .map(|f| g.index_of_str(f))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| at_line(line, e))?;
                e.sort_unstable();
                if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::Parse {
                        line,
                        message: format!("duplicate vertex {} in edge", g.label(w[0])),
                    });
                }
                if let Some(first) = seen.insert(e.clone(), line) {
                    return Err(Error::Parse {
                        line,
                        message: format!(
                            "duplicate edge {{{}}} (first on line {first})",
                            e.iter().map(|&x| g.label(x)).join(",")
                        ),
                    });
                }
                edges.push(e);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown key `{other}`"),
                })
            }
        }
    }
    let ground = ground.ok_or_else(|| Error::Parse {
        line: text.lines().count() + 1,
        message: "missing `vertices:` line".into(),
    })?;
    Hypergraph::new(ground, edges)
}

pub fn read_hypergraph(path: impl AsRef<Path>) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_hypergraph(&text)
}

/// Writes a hypergraph back in the text format.
pub fn write_hypergraph(g: &Hypergraph) -> String {
    let mut out = format!("vertices: {}\n", g.ground().labels().iter().join(" "));
    for e in g.edges() {
        out.push_str(&format!(
            "edge: {}\n",
            e.iter().map(|&x| g.ground().label(x)).join(" ")
        ));
    }
    out
}

/// `1 2 3 // 2 1 3`: the ground set in order over its images.
pub fn two_row(p: &Perm, from: &GroundSet, to: &GroundSet) -> String {
    format!(
        "{} // {}",
        from.labels().iter().join(" "),
        (0..p.len()).map(|i| to.label(p.apply(i))).join(" ")
    )
}

/// Cycle notation over labels; `()` for the identity.
pub fn cycles(p: &Perm, ground: &GroundSet) -> String {
    let cs = p.cycles();
    if cs.is_empty() {
        return "()".into();
    }
    cs.iter()
        .map(|c| format!("({})", c.iter().map(|&x| ground.label(x)).join(" ")))
        .collect()
}

/// `1->a 2->b ...` for a bijection between two ground sets.
pub fn mapping(p: &Perm, from: &GroundSet, to: &GroundSet) -> String {
    (0..p.len())
        .map(|i| format!("{}->{}", from.label(i), to.label(p.apply(i))))
        .join(" ")
}

/// A partial over labels, `(1 2 // 2 5)`.
pub fn partial(p: &Partial, from: &GroundSet, to: &GroundSet) -> String {
    format!(
        "({} // {})",
        p.domain().iter().map(|x| from.label(x.idx())).join(" "),
        p.image().iter().map(|x| to.label(x.idx())).join(" ")
    )
}

/// One term per line; `0` or `1` for the ring constants.
pub fn polypartial(p: &Polypartial, from: &GroundSet, to: &GroundSet) -> String {
    if p.is_zero() {
        return "0".into();
    }
    if p.is_one() {
        return "1".into();
    }
    p.terms().iter().map(|t| partial(t, from, to)).join("\n")
}
