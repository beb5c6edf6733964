use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("at most 10 variables are supported, got {0}")]
    TooManyVariables(usize),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("linear change of coordinates is singular")]
    SingularChange,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("monomial ideal is not strongly stable")]
    NotStronglyStable,

    #[error("generic initial ideal did not converge after {trials} trials (last bound {bound})")]
    GinNonConvergence { trials: usize, bound: u64 },

    #[error("saturation could not be certified after {0} attempts")]
    SaturationCertification(usize),

    #[error("quotient dimension is {found}, expected {expected}")]
    DimensionGuard { expected: String, found: i64 },

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
