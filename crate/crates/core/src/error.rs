use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("content is not a partition: {0}")]
    NonPartitionContent(String),
    #[error("row sizes are not weakly decreasing")]
    NotStraight,
    #[error("multiline queue is not nonwrapping")]
    NotNonwrapping,
    #[error("filling has a coquinv triple")]
    NotCoquinvFree,
    #[error("need {need} columns but only {have} available")]
    TooNarrow { need: usize, have: usize },
    #[error("row index {0} out of range")]
    BadRowIndex(usize),
    #[error("bad sigma word: {0}")]
    BadSigmaWord(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("column count mismatch: {0} vs {1}")]
    ColumnMismatch(usize, usize),
    #[error("letter {0} exceeds alphabet size {1}")]
    AlphabetTooSmall(usize, usize),
    #[error("value {0} out of range")]
    OutOfRange(usize),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("identity violated: {0}")]
    IdentityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
