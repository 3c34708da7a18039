use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected; distances are undefined")]
    Disconnected,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("unknown atlas graph {0:?}")]
    UnknownAtlasName(String),
    #[error("unknown lemma matrix {0:?}")]
    UnknownLemmaMatrix(String),
    #[error("unknown lemma {0:?}")]
    UnknownLemma(String),
    #[error("polynomials belong to different variable contexts")]
    RingMismatch,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("{0} variables exceed the supported maximum of {max}", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("Gröbner completion exceeded its budget of {0} pair reductions")]
    BudgetExceeded(u64),
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationRange { n: usize, max: usize },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
