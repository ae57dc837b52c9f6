use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("structure constant {context} is not homogeneous: expected degree {expected}, found term `{label}` of degree {found}")]
    Inhomogeneous {
        context: String,
        label: String,
        expected: i64,
        found: i64,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported structure: {0}")]
    Unsupported(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("inconsistent sector data: {0}")]
    InconsistentSector(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
