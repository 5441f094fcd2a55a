use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree {degree} out of range (table supports up to {max_degree})")]
    DegreeOutOfRange { degree: usize, max_degree: usize },

    #[error("invalid recurrence table: {0}")]
    InvalidTable(String),

    #[error("numerical failure at index {index}: {detail}")]
    NumericalFailure { index: usize, detail: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degree {degree} is outside the orthogonality range (need a < {bound})")]
    OrthogonalityRange { degree: usize, bound: f64 },

    #[error("negative discriminant {0:e}")]
    DiscriminantNegative(f64),

    #[error("extra points are complex ({reason})")]
    ComplexRoots { reason: String },

    #[error("realization failed: imaginary residue {residue:e} exceeds {limit:e}")]
    RealizationFailure { residue: f64, limit: f64 },

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("extra points out of order: e1 = {e1} > e2 = {e2}")]
    Ordering { e1: f64, e2: f64 },

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
}
