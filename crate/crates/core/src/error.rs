use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),

    #[error("subgroup is not contained in the ambient group of the quotient")]
    NotSubgroup,

    #[error("group order {order} exceeds cap {cap}")]
    OrderExceedsCap { order: u128, cap: u128 },

    #[error("time {time} is outside the axis 0..{axis_len}")]
    TimeOutOfRange { time: usize, axis_len: usize },

    #[error("time subset must be nonempty")]
    EmptySubset,

    #[error("cut must be a proper nonempty subset of the axis")]
    DegenerateCut,

    #[error("malformed interval: {0}")]
    MalformedInterval(String),

    #[error("axis of length {axis_len} is too short (need at least {required})")]
    AxisTooShort { axis_len: usize, required: usize },

    #[error("window ending at time {time} is not a segment of any codeword")]
    WindowNotInRestriction { time: usize },

    #[error("input at time {time} is not in the input group F_k")]
    InputNotInInputGroup { time: usize },

    #[error("word is not a codeword")]
    NotACodeword,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
