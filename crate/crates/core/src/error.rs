use thiserror::Error;

/// Errors raised by the algebra kernel, the expression language and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero quaternion")]
    DivisionByZero,
    #[error("|Im(a)| is irrational; the imaginary unit of a is not representable over the rationals")]
    NotRationallyNormalizable,
    #[error("argument is real; it has no imaginary unit")]
    RealArgument,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("symmetrization produced a non-real coefficient (internal error)")]
    InternalRealityViolation,
    #[error("inverse of the zero fraction")]
    DivisionByZeroFrac,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system is singular (resultant is zero)")]
    SingularSystem,
    #[error("point ({a}, {b}) does not commute: ab != ba")]
    NonCommutingPoint { a: String, b: String },
    #[error("polynomial has degree 0 in {var}")]
    DegreeTooLow { var: String },
    #[error("syntax error at byte {offset}: {message}; expected one of: {}", expected.join(", "))]
    Syntax {
        offset: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("expression mixes the one-variable `q` with `q1`/`q2`")]
    MixedVariable,
    #[error("expected a polynomial in {expected}, found one in {found}")]
    WrongVariables { expected: String, found: String },
    #[error("degree limit {limit} exceeded while lowering")]
    DegreeLimit { limit: usize },
    #[error("coefficient size limit of {bits} bits exceeded while lowering")]
    CoefficientLimit { bits: u64 },
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
