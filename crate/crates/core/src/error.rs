use thiserror::Error;

/// Errors raised by the partition, category, linear-algebra and group layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("color mismatch: lower word `{lower}` of the top diagram does not match upper word `{upper}` of the bottom diagram")]
    ColorMismatch { lower: String, upper: String },

    #[error("cannot rotate a diagram with an empty upper row")]
    EmptyUpperRow,

    #[error("diagram is not a pairing: {0}")]
    NotAPairing(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("closure is not saturated within its budget")]
    NotSaturated,

    #[error("unknown geometry `{0}`")]
    UnknownGeometry(String),

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("size {size} exceeds the cap {cap}")]
    SizeOverflow { size: usize, cap: usize },

    #[error("geometry {0} has no sampler")]
    NoSampler(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
