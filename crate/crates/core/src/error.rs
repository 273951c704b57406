use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` contains the reserved marker `*`")]
    ReservedLabel(String),
    #[error("cover relations contain a cycle through `{0}`")]
    Cycle(String),
    #[error("`{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("subset is not a poset ideal: `{0}` is in it but `{1}` < `{0}` is not")]
    NotAnIdeal(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("complex has {0} vertices; at most 128 are supported")]
    TooManyVertices(usize),
    #[error("the given set is not a face of the complex")]
    NotAFace,
    #[error("the complex is {{∅}}; its Stanley-Reisner ring is the field itself")]
    EmptyComplex,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the ideal is not squarefree")]
    NotSquarefree,
    #[error("exponent vector has length {got}, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("ideals live over different variable sets")]
    VariableMismatch,
    #[error("the poset ideal Q is empty")]
    EmptyQ,
    #[error("{0} is not zero or a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("n = {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
