use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("classes live on different models: {left} vs {right}")]
    ModelMismatch { left: String, right: String },
    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: u32, found: u32 },
    #[error("product has grade {grade}, exceeding dimension {dim}")]
    GradeOverflow { grade: u32, dim: u32 },
    #[error("a grade-{grade} class needs {expected} coefficients, got {found}")]
    BasisLength {
        grade: u32,
        expected: usize,
        found: usize,
    },
    #[error("invalid ambient model: {0}")]
    InvalidModel(String),
    #[error("invalid rank {0}: rank must be at least 1")]
    InvalidRank(u32),
    #[error("exterior power index {r} outside [1, {n}]")]
    WedgeIndex { n: u32, r: u32 },
    #[error("invalid divisor component `{label}`: {reason}")]
    InvalidComponent { label: String, reason: String },
    #[error("duplicate component label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid search configuration: {0}")]
    InvalidSearch(String),
    #[error("closed form and intersection-product evaluation disagree on {0}")]
    PathDisagreement(String),
    #[error("malformed rational `{0}`")]
    ParseRational(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
