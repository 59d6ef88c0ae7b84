use thiserror::Error;

/// Hard upper bound on vertex count; adjacency rows are single machine words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph on {0} vertices exceeds the size cap of {1}")]
    SizeCap(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("explicit automorphism enumeration is capped at {0} vertices")]
    EnumerationCap(usize),
    #[error("arithmetic overflow in exact rational computation")]
    Overflow,
    #[error("GP denominator {0} outside {{1,2}}: internal consistency failure")]
    BadDenominator(i128),
    #[error("tadpole: {0}")]
    Tadpole(String),
    #[error("census: {0}")]
    Census(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
