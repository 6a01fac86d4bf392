use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph would have {0} vertices, the limit is {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("{family} needs a parameter of at least {min}, got {got}")]
    BelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("edge {u}-{v} is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("graph6 error at byte {position}: {reason}")]
    Graph6 { position: usize, reason: String },
    #[error("edge list error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("enumeration supports 1..=7 vertices, got {0}")]
    EnumerationRange(usize),
    #[error("{0}")]
    Invalid(String),
}
