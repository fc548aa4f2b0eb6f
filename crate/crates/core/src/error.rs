use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("({0}, {1}) is an edge, expected a nonadjacent pair")]
    AdjacentPair(usize, usize),

    #[error("endpoints must be distinct, got {0} twice")]
    SameEndpoints(usize),

    #[error("vertex {0} is not a member of the set")]
    NotAMember(usize),

    #[error("include and exclude sets overlap")]
    OverlappingConstraints,

    #[error("enumeration of {n}-vertex graphs exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("path-addition numbers need at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("k = {k} outside the predicted range 1..={max}")]
    StepOutOfRange { k: usize, max: usize },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
