use thiserror::Error;

/// Errors raised while building or querying graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("operation undefined on the 0-vertex graph")]
    EmptyGraph,
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Errors raised by the counting engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigmaError {
    #[error("graph of order {order} exceeds the brute-force cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("arithmetic overflow while counting subsets")]
    Overflow,
    #[error("memo table belongs to a different root graph")]
    MemoRootMismatch,
}

/// Errors raised by corpus generation and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("no graphs left after filtering")]
    NoGraphs,
    #[error("invalid corpus at line {line}: {reason}")]
    InvalidCorpus { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sigma(#[from] SigmaError),
}
