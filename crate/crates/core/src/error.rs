use thiserror::Error;

/// Errors raised while building, reading, or solving graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("{what} is limited to {cap} vertices, graph has {n}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid color partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("automorphism group order overflows 128 bits")]
    OrderOverflow,
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// True when the error (or the error it wraps) is a size-cap overflow.
    pub fn is_cap_exceeded(&self) -> bool {
        match self {
            Error::CapExceeded { .. } => true,
            Error::AtLine { source, .. } => source.is_cap_exceeded(),
            _ => false,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
