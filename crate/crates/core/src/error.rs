use thiserror::Error;

/// Failure modes across the library.
///
/// Variants fall into two families: malformed input (bad files, shapes,
/// unknown names) and mathematical failure (a map that is not a chain map,
/// a holonomy that is not flat, ...). [`Error::is_input_error`] tells them
/// apart for exit-code mapping.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionError { expected: usize, found: usize },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a complex: D_{} * D_{degree} != 0", .degree + 1)]
    NotAComplex { degree: usize },
    #[error("not a chain map in degree {degree}")]
    NotAChainMap { degree: usize },
    #[error("short sequence not exact in degree {degree}: {reason}")]
    NotExact { degree: usize, reason: String },
    #[error("bad cover: {0}")]
    BadCover(String),
    #[error("vector is not a cocycle in degree {degree}")]
    NotACocycle { degree: usize },
    #[error("holonomy is not flat on simplex {simplex:?}")]
    NotFlat { simplex: Vec<usize> },
    #[error("holonomy on edge {edge:?} is not a Lie algebra automorphism")]
    NotAutomorphism { edge: [usize; 2] },
    #[error("forms belong to different models ({0} vs {1})")]
    ModelMismatch(String, String),
    #[error("bad simplicial map: {0}")]
    BadMap(String),
    #[error("map is not a Lie algebra homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("base complex must have scalar coefficients (coefficient dim {0})")]
    BadBase(usize),
    #[error("Killing form is not negative definite; supply an explicit metric")]
    NotCompactType,
    #[error("degree {degree} out of range 0..={top}")]
    DegreeError { degree: usize, top: usize },
    #[error("numerical failure: {message} (condition estimate {condition:e})")]
    NumericalError { message: String, condition: f64 },
    #[error("complex is not oriented: {0}")]
    NotOriented(String),
    #[error("cohomology not stable under truncation: N={n_low} gives {low:?}, N={n_high} gives {high:?}")]
    Unstable {
        n_low: usize,
        n_high: usize,
        low: Vec<usize>,
        high: Vec<usize>,
    },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("bracket leaves the truncated model (total homogeneity {0})")]
    OutOfTruncation(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for errors caused by malformed or unusable input rather than by a
    /// mathematical property of otherwise well-formed data.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedAlgebra(_)
                | Error::DimensionError { .. }
                | Error::NotFound(_)
                | Error::Parse(_)
                | Error::Io(_)
                | Error::InvalidInput(_)
                | Error::DegreeError { .. }
                | Error::ModelMismatch(..)
                | Error::BadBase(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
