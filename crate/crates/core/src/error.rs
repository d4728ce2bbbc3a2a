use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("missing column for included criterion `{0}`")]
    MissingColumn(String),

    /// `row` is the 1-based data row (header excluded), `col` the header name.
    #[error("row {row}, column `{col}`: cannot parse `{value}` as a finite number")]
    Parse { row: usize, col: String, value: String },

    #[error("duplicate player `{0}`")]
    DuplicatePlayer(String),

    #[error("dataset has no data rows")]
    EmptyDataset,

    #[error("malformed csv: {0}")]
    Csv(String),

    #[error("invalid schema: {0}")]
    Schema(String),

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),

    #[error("unknown player `{0}`")]
    UnknownPlayer(String),

    #[error("vector dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid metric exponent p = {0} (need finite p >= 1)")]
    InvalidMetric(f64),

    #[error("k = {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },

    #[error("series lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("column `{0}` is constant")]
    ConstantColumn(String),

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("scatter series has no points")]
    EmptySeries,

    #[error("dataset failed validation: {0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
