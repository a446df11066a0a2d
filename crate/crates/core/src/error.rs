use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("image dimensions must be positive, got {width}x{height}")]
    EmptyImage { width: usize, height: usize },

    #[error("expected {expected} spins for the given dimensions, got {actual}")]
    SpinCount { expected: usize, actual: usize },

    #[error("spin at index {index} is {value}, expected -1 or +1")]
    InvalidSpin { index: usize, value: i8 },

    #[error("dimension mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    DimensionMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    #[error("pixel index {index} out of range for {len} pixels")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid energy parameters: {0}")]
    InvalidParams(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("flip probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("temperature schedule undefined at step {k} of {k_max}")]
    ScheduleStep { k: usize, k_max: usize },

    #[error("temperature must be non-negative, got {0}")]
    NegativeTemperature(f64),

    #[error("pbm parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("image has {pixels} pixels, exhaustive search is capped at {cap}")]
    TooLarge { pixels: usize, cap: usize },
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
