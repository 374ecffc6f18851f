//! Automorphism groups and isomorphisms of hypergraphs, computed as
//! determinants over the ring of partial permutations.
//!
//! Every edge pair `(A, B)` of equal size contributes the *bracket* of `A`
//! onto `B`: the formal F₂-sum of all bijections `A -> B`, viewed as partial
//! permutations. Arranging the brackets in a square matrix and taking its
//! determinant (products are joins of partials) yields exactly the set of
//! automorphisms, each as a partial on the vertices that lie in some edge.
//!
//! ```
//! use hyperaut::{aut, AutOptions, Hypergraph};
//!
//! // path 1 - 2 - 3
//! let g = Hypergraph::from_labels(3, &[&[1, 2], &[2, 3]]).unwrap();
//! let r = aut(&g, &AutOptions::default()).unwrap();
//! assert_eq!(r.order, 2);
//! ```
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod cli;
pub mod config;
pub mod error;
pub mod format;
pub mod ground;
pub mod group;
pub mod hypergraph;
pub mod matrix;
pub mod oracle;
pub mod partial;
pub mod perm;
pub mod polypartial;
pub mod verify;

pub use config::Caps;
pub use error::{Error, Result};
pub use ground::{GroundSet, Label, Point, Side};
pub use group::{aut, iso, AutOptions, AutResult, DetMethod, EdgePermutation, IsoResult};
pub use hypergraph::Hypergraph;
pub use matrix::{PolyMatrix, RowOrder};
pub use oracle::OracleConfig;
pub use partial::{transversal, Partial};
pub use perm::{Perm, PermSet};
pub use polypartial::Polypartial;
