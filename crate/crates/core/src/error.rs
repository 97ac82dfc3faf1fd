use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroInverse,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("matrix size {0} is too small (need n >= 2)")]
    SizeTooSmall(usize),
    #[error("degree {requested} exceeds the certified range {certified}")]
    DegreeOutOfRange { requested: usize, certified: usize },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("map is not colinear: {0}")]
    NotColinear(String),
    #[error("component assembly disagrees with closed form: {0}")]
    MismatchAgainstClosedForm(String),
    #[error("resource budget exceeded: {0}")]
    ResourceBudgetExceeded(String),
    #[error("trace invariants differ: {0} vs {1}")]
    TraceMismatch(String, String),
    #[error("not generic: {0}")]
    NotGeneric(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
