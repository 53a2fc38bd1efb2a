use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("size {size} out of range for family {family}")]
    SizeOutOfRange { family: String, size: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("{n} vertices exceeds the capacity of {cap}")]
    CapacityExceeded { n: usize, cap: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("factor {index} is trivial (fewer than two vertices)")]
    TrivialFactor { index: usize },
    #[error("factor {index} is disconnected")]
    DisconnectedFactor { index: usize },
    #[error("a product needs at least one factor")]
    NoFactors,
    #[error("invalid coordinate: {0}")]
    InvalidCoordinate(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected a set of {expected} vertices, got {found}")]
    SetSize { expected: usize, found: usize },
    #[error("parameters out of range: {0}")]
    ParameterRange(String),
    #[error("construction needs {needed} factors of order at least 3, found {found}")]
    NotEnoughBigFactors { needed: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("seed failed engine verification: {0}")]
    VerificationFailed(String),
    #[error("the given set does not percolate")]
    NotPercolating,
    #[error("search budget exhausted: m lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
    #[error("point lies outside the window")]
    OutsideWindow,
    #[error("seed must keep a padding of {needed} from the window boundary")]
    Padding { needed: usize },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
