//! Shared error type for all domain operations.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("series is not a unit (constant term is zero)")]
    NonUnit,

    #[error("substitution component {index} has nonzero constant term")]
    NonLocalSubstitution { index: usize },

    #[error("series is not regular in variable {var} up to certified order {order}")]
    NotRegular { var: usize, order: u32 },

    #[error("truncation order too small: need {need}, have {have}")]
    TruncationTooSmall { need: u32, have: u32 },

    #[error("operation requires a truncation order but all inputs are exact polynomials")]
    OrderRequired,

    #[error("polynomial is not monic in variable {var}")]
    NotMonic { var: usize },

    #[error("degenerate linear part: partial derivative in variable {var} vanishes at the origin")]
    DegenerateLinearPart { var: usize },

    #[error("coefficient field extension nesting beyond one level is not supported")]
    ExtensionNesting,

    #[error("elements of incompatible coefficient fields: {0}")]
    FieldMismatch(String),

    #[error("element is not invertible modulo the minimal polynomial")]
    NotInvertible,

    #[error("polynomial is not squarefree to the working order")]
    NotSquarefree,

    #[error("grading identity violated at graded index {k}: expected {expected}, found {found}")]
    GradingViolation { k: i64, expected: i64, found: i64 },

    #[error("piece at graded index {k} is not homogeneous")]
    NotHomogeneous { k: i64 },

    #[error("blow-up center is not rational over the current coefficient field")]
    IrrationalCenter,

    #[error("resolution did not monomialize within max depth {0}")]
    MaxDepthExceeded(u32),

    #[error("expected {expected} components, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("zero row {0} in exponent matrix")]
    ZeroRow(usize),

    #[error("weighted homogeneity violated: coefficient of z^{z_deg} in position {i} must vanish")]
    WeightViolation { i: u32, z_deg: u32 },

    #[error("input is zero up to the certified order; verdict indeterminate")]
    ZeroToOrder,

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("scenario `{id}`: {msg}")]
    Scenario { id: String, msg: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
