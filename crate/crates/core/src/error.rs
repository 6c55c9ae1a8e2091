use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point sets have different widths ({0} vs {1})")]
    WidthMismatch(usize, usize),

    #[error("line {index} has {size} distinct points, expected 3")]
    BadLineSize { index: usize, size: usize },

    #[error("line {index} references point {point}, but only {points} points exist")]
    PointOutOfRange {
        index: usize,
        point: u32,
        points: usize,
    },

    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),

    #[error("point labels are not 2-subsets of a base set")]
    LabelsNotPairs,

    #[error("point labels do not form the full set of 2-subsets of the base set")]
    NotFullPairSet,

    #[error("bad size parameter: {0}")]
    BadSize(String),

    #[error("the pair-to-point map is not a bijection")]
    MuNotBijective,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("perspective data violates the construction laws: {0}")]
    InvariantViolation(String),

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),

    #[error("hyperplane family is not a projective space: {0}")]
    NotProjective(String),

    #[error("point set is not a hyperplane")]
    NotAHyperplane,

    #[error("hyperplane admits no partition decomposition over the base set")]
    NoDecomposition,

    #[error("configuration is not a binomial one-over type matching the witness")]
    NotBinomialPlusOne,

    #[error("catalog fixture failed recomputation: {0}")]
    FixtureMismatch(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
