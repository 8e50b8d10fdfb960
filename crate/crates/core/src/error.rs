use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not column constant")]
    NotColumnConstant,

    #[error("series precondition violated: {0}")]
    SeriesPrecondition(&'static str),

    #[error("invalid arc id {0}")]
    InvalidArc(usize),

    #[error("invalid vertex index {0}")]
    InvalidVertex(usize),

    #[error("weight scheme: {0}")]
    Scheme(String),

    #[error("enumerating closed paths of length {length} over {arcs} arcs exceeds the bound of {bound} candidates")]
    ResourceLimit { arcs: usize, length: usize, bound: u64 },

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rejected combination: {0}")]
    Rejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
