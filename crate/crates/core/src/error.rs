use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge is empty")]
    EmptyEdge,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("vertex {0} lies in no edge")]
    IsolatedVertex(String),
    #[error("hypergraph contains loops")]
    LoopsPresent,
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("malformed L2-section: {0}")]
    MalformedSection(String),
    #[error("product kind `{0}` is not supported by this operation")]
    UnsupportedKind(String),
    #[error("unknown product kind `{0}`")]
    UnknownKind(String),
    #[error("unsupported strong variant {0} (expected 1..=5)")]
    UnsupportedVariant(u8),
    #[error("factor is not uniform")]
    NotUniform,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("edge pair spans {size} cells, above the cap of {cap}")]
    EdgeBlowupCap { size: usize, cap: usize },
    #[error("bad factor index {0}")]
    BadIndex(usize),
    #[error("product kind `{0}` has no unit")]
    NoUnit(String),
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error("vertex relabeling is not injective")]
    NonInjectiveRelabel,
    #[error("factorization failed: {0}")]
    FactorizationFailed(String),
}
