use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("matrix is not {kind}: defect {defect:e} exceeds tolerance {tol:e}")]
    NotNormal { kind: &'static str, defect: f64, tol: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid Schatten exponent {0}")]
    InvalidExponent(f64),
    #[error("missing partial derivative in {0} at a coincident pair")]
    MissingDerivative(&'static str),
    #[error("function is not a 2π-periodic trigonometric polynomial")]
    NotTorusFunction,
    #[error("sinc window of radius {given} does not cover nodes up to {needed}")]
    TruncationInsufficient { needed: usize, given: usize },
    #[error("degree {degree} exceeds kernel order {n}")]
    DegreeTooHigh { degree: usize, n: usize },
    #[error("representation does not cover spectral point {0}")]
    SupportNotCovered(String),
    #[error("exponents outside the theorem's regime: {0}")]
    RegimeMismatch(String),
    #[error("filter constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("unsupported function representation: {0}")]
    UnsupportedRepresentation(&'static str),
    #[error("class-C function lacks its dual factorization")]
    MissingFactorization,
    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
