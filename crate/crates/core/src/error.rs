use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// The variants are grouped the way the command-line front end maps them onto
/// exit codes: input problems, refusals (a hypothesis gate was not met),
/// retryable genericity failures, and internal consistency failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },

    #[error("generator {index} is the zero polynomial")]
    ZeroGenerator { index: usize },

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("ideal has no generators")]
    EmptyIdeal,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("monomial ideal is not Borel fixed")]
    NotBorelFixed,

    #[error("regularity {actual} exceeds the required bound {required}")]
    Regularity { required: usize, actual: usize },

    #[error("the ideal defines the empty scheme")]
    EmptyScheme,

    #[error("genericity failure: {reason} (seeds {seeds:?})")]
    Genericity { reason: String, seeds: Vec<u64> },

    #[error("refused: {0}")]
    Hypothesis(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Retrying with a different seed may succeed.
    pub fn is_retryable(&self) -> bool {
        matches!(self, Error::Genericity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
