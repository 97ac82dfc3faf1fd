use std::path::PathBuf;

use thiserror::Error;

/// Failures of a CLI run, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("config parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid config: {0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] counit_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use counit_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Validation(_) => exit::INPUT,
            CliError::Core(e) => match e {
                E::ResourceBudgetExceeded(_) => exit::BUDGET,
                E::DegreeOutOfRange { .. } => exit::INCONCLUSIVE,
                E::ZeroInverse
                | E::FieldMismatch(_)
                | E::SingularMatrix
                | E::ShapeError(_)
                | E::SizeTooSmall(_)
                | E::NotACharacter(_)
                | E::TraceMismatch(_, _)
                | E::NotGeneric(_)
                | E::Parse { .. } => exit::INPUT,
                _ => exit::FAIL,
            },
        }
    }
}

/// Cache problems. Both lead to a recompute with a warning.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CacheError {
    #[error("cache version {found} does not match {expected}")]
    CacheVersionMismatch { found: String, expected: String },
    #[error("corrupt cache file: {0}")]
    CorruptCache(String),
    #[error("cache i/o: {0}")]
    Io(String),
}

pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const BUDGET: i32 = 4;
}
