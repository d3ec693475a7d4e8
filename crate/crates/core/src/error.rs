use thiserror::Error;

pub type Result<T, E = AqError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AqError {
    #[error("dimension {0} is outside 1..=30")]
    InvalidDimension(u32),

    #[error("index {index} is outside {min}..={max}")]
    IndexOutOfRange { index: u32, min: u32, max: u32 },

    #[error("vertex {vertex} is not a label of AQ_{n}")]
    VertexOutOfRange { vertex: u64, n: u32 },

    /// The operation is only defined (or only meaningful) for a range of dimensions.
    #[error("{what} requires n in {min}..={max}, got n = {n}")]
    UnsupportedDimension {
        what: &'static str,
        n: u32,
        min: u32,
        max: u32,
    },

    /// The request exceeds a memory or enumeration budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    Argument(String),
}
