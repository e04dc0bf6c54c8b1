use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A file-format error, pointing at the offending line (1-based).
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The graph value itself is malformed (self-loop, bad color, ...).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// The layout is not a permutation of the graph's vertices.
    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    /// A vertex id fell outside 0..n.
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    /// An exact solver or oracle was asked to handle more vertices than its
    /// enumeration strategy can afford.
    #[error("instance too large for exact mode: n = {n} exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },

    /// The layout fed to the interval construction is not a colored layout.
    #[error("layout is not a colored layout of the graph")]
    NotColoredLayout,

    /// An interval model violates its invariants.
    #[error("invalid interval model: {0}")]
    InvalidModel(String),

    /// A certificate was checked against a graph on a different vertex set.
    #[error("certificate vertex set does not match the graph: {0}")]
    VertexSetMismatch(String),

    /// A solver produced a witness that fails its own consistency check.
    /// Seeing this means a bug in this crate, not bad input.
    #[error("internal solver error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
