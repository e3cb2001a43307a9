use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter {0}: expected a nonzero signed index")]
    InvalidLetter(i64),
    #[error("row lengths {0:?} are not weakly decreasing and positive")]
    InvalidShape(Vec<usize>),
    #[error("rows do not match the declared shape {0}")]
    ShapeMismatch(Partition),
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("tableau violates the symplectic condition")]
    NotKing,
    #[error("two-line array is not in lexicographic order")]
    NotLexicographic,
    #[error("top and bottom rows have different lengths")]
    RowLengthMismatch,
    #[error("shapes of the two tableaux differ: {0} vs {1}")]
    PairShapeMismatch(Partition, Partition),
    #[error("recording tableau is not standard")]
    NotStandard,
    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillating(String),
    #[error("invalid semistandard oscillating tableau: {0}")]
    InvalidSsot(String),
    #[error("not a valid Berele step")]
    InvalidBereleStep,
    #[error("not a valid RS-C pair")]
    InvalidRsPair,
    #[error("not a column word")]
    NotColumnWord,
    #[error("index {i} out of range 1..{k}")]
    IndexOutOfRange { i: u16, k: u16 },
    #[error("shape {0} has more than {1} rows")]
    TooManyRows(Partition, u16),
    #[error("slide requested on a puncture that is already an outer corner")]
    PunctureAtCorner,
    #[error("invalid skew shape: inner {0} is not contained in outer {1}")]
    InvalidSkew(Partition, Partition),
}
