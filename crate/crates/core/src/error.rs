use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} must be weakly decreasing with positive parts")]
    InvalidPartition(Vec<usize>),
    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },
    #[error("tableau rows do not match the shape: {0}")]
    ShapeMismatch(String),
    #[error("not semistandard: {0}")]
    NotSemistandard(String),
    #[error("content {0:?} is not a partition (sort it first)")]
    NonPartitionContent(Vec<usize>),
    #[error("content {0:?} is not rectangular")]
    NotRectangularContent(Vec<usize>),
    #[error("not a permutation of 1..n: {0:?}")]
    NotPermutation(Vec<u32>),
    #[error("entry {entry} outside the alphabet 1..={max}")]
    EntryOutOfRange { entry: u32, max: u32 },
    #[error("set is not closed under the action (element {0} maps outside)")]
    NotClosed(usize),
    #[error("action does not have order dividing {order}: element {index} fails")]
    OrderMismatch { order: usize, index: usize },
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown instance `{0}`")]
    UnknownInstance(String),
    #[error("parameter out of supported range: {0}")]
    OutOfRange(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
