use thiserror::Error;

/// Errors produced by the library.
///
/// Cap violations are reported as distinct variants so callers (the CLI in
/// particular) can tell "input too big" apart from "input malformed".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point {0} in partial domain")]
    DuplicateDomain(usize),
    #[error("duplicate point {0} in partial image")]
    DuplicateImage(usize),
    #[error("domain has {domain} points but image has {image}")]
    LengthMismatch { domain: usize, image: usize },
    #[error("vertex sets differ in size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("point index {index} out of range for ground set of size {size}")]
    PointOutOfRange { index: usize, size: usize },

    #[error("expansion of {needed} elements exceeds cap of {cap}")]
    ExpansionTooLarge { needed: u128, cap: u128 },
    #[error("edge arity {arity} exceeds cap of {cap}")]
    ArityTooLarge { arity: usize, cap: usize },
    #[error("matrix dimension {dim} exceeds cap of {cap} for this method")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("ground set of size {size} exceeds oracle cap of {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },
    #[error("oracle exceeded its time budget")]
    OracleTimeout,

    #[error("edges have different sizes ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },
    #[error("hypergraph is not homogeneous")]
    NotHomogeneous,
    #[error("hypergraph is not a graph (edge of size {0})")]
    NotAGraph(usize),
    #[error("matrix dimensions do not match ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("polypartial terms have mixed domain sizes")]
    MixedDomainSizes,
    #[error("permutation does not preserve the edge family")]
    NotAnAutomorphism,

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("empty edge")]
    EmptyEdge,
    #[error("duplicate vertex {0} inside an edge")]
    DuplicateVertexInEdge(String),
    #[error("duplicate edge {0}")]
    DuplicateEdge(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for the "resource cap exceeded" family.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::ExpansionTooLarge { .. }
                | Error::ArityTooLarge { .. }
                | Error::DimensionTooLarge { .. }
                | Error::GroundSetTooLarge { .. }
                | Error::OracleTimeout
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
