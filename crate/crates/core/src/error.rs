use thiserror::Error;

use crate::scalar::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("division by zero")]
    DivisionByZero,

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("map is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("subspace is not contained in the ambient subspace (vector {index})")]
    NotContained { index: usize },

    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),

    #[error("Hopf axiom violated: {0}")]
    AxiomViolation(String),

    #[error("antipode is not invertible")]
    AntipodeNotInvertible,

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("index {index} out of range (size {order})")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("characteristic 2 is not supported here")]
    CharTwoUnsupported,

    #[error("map is not a 1-cochain (violates the derivation/coderivation constraints)")]
    NotInC1,

    #[error("computation too large: matrix of shape {rows}x{cols} exceeds the memory policy")]
    TooLarge { rows: usize, cols: usize },

    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),

    #[error("not a cocycle: condition fails at {0:?}")]
    NotACocycle(Vec<usize>),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable code, used in CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::NotPrime(_) => "NotPrime",
            Error::FieldMismatch(..) => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::ArityMismatch(_) => "ArityMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::Singular => "Singular",
            Error::NotContained { .. } => "NotContained",
            Error::MalformedAlgebra(_) => "MalformedAlgebra",
            Error::AxiomViolation(_) => "AxiomViolation",
            Error::AntipodeNotInvertible => "AntipodeNotInvertible",
            Error::NotAGroup(_) => "NotAGroup",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::CharTwoUnsupported => "CharTwoUnsupported",
            Error::NotInC1 => "NotInC1",
            Error::TooLarge { .. } => "TooLarge",
            Error::UnsupportedDegree(_) => "UnsupportedDegree",
            Error::NotACocycle(_) => "NotACocycle",
            Error::Io(_) => "IoError",
            Error::Json(_) => "JsonError",
        }
    }
}
