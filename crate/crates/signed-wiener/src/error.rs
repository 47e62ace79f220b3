use thiserror::Error;

/// Errors produced by constructors, parsers and the exhaustive searches.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("a tree on {n} vertices needs {} edges, got {edges}", n - 1)]
    WrongEdgeCount { n: usize, edges: usize },

    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("graph is not connected")]
    Disconnected,

    #[error("signed distance is undefined for a vertex paired with itself ({0})")]
    SamePair(usize),

    #[error("instance too large: size {size} exceeds cap {cap}")]
    InstanceTooLarge { size: usize, cap: usize },

    #[error("tree carries no root/branch/leaf roles; build it from a StarSpec")]
    MissingRoles,

    #[error("signing has {got} signs, host tree has {expected} edges")]
    SigningLength { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidPermutation(String),

    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
