use thiserror::Error;

/// Errors raised by the scalar kernels, band storage and inversion pipelines.
///
/// Band and row indices carried by variants are 1-based, matching the usual
/// subscripts `a_i .. g_i` of a heptadiagonal matrix.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeptaError {
    #[error("matrix order {0} is too small for the heptadiagonal recurrences (need n >= 5)")]
    InvalidOrder(usize),

    #[error("band `{band}` has length {found}, expected {expected}")]
    BandLength { band: char, expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entry ({row}, {col}) lies outside the seven bands but is nonzero")]
    NotHeptadiagonal { row: usize, col: usize },

    #[error("super-diagonal entry g_{0} is zero; the numeric recurrence breaks down (use the symbolic engine)")]
    ZeroSuperDiagonal(usize),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at t = 0")]
    PoleAtZero,

    #[error("inverse entry ({row}, {col}) has a pole at t = 0 although the determinant does not vanish")]
    InternalPole { row: usize, col: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HeptaError>;
