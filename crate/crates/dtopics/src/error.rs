//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("duplicate dialogue id `{0}`")]
    DuplicateDialogue(String),

    #[error("unknown transcript format `{0}` (expected `tsv` or `json`)")]
    UnknownFormat(String),

    #[error("unknown pipeline stage `{0}`")]
    UnknownStage(String),

    #[error("corpus contains no non-empty documents")]
    EmptyCorpus,

    #[error("empty vocabulary")]
    EmptyVocabulary,

    #[error("token `{0}` is not in the vocabulary (vocabulary/corpus mismatch)")]
    TokenNotInVocabulary(String),

    #[error("dictionary filter removed every term")]
    FilterRemovedAllTerms,

    #[error("k = {k} exceeds the number of distinct rows ({distinct})")]
    KExceedsRows { k: usize, distinct: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("predicted and gold assignments differ in length ({pred} vs {gold})")]
    AssignmentLengthMismatch { pred: usize, gold: usize },

    #[error("corpus has no gold labels")]
    MissingGoldLabels,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("unsupported checkpoint version {0}")]
    CheckpointVersion(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 usage, 2 data/format, 3 invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidConfig(_) | Error::UnknownFormat(_) | Error::UnknownStage(_) => 1,
            Error::InvariantViolation(_) => 3,
            _ => 2,
        }
    }
}
