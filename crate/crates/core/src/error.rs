use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed composition text {0:?}")]
    MalformedComposition(String),

    #[error("parts must be positive, got {0:?}")]
    ZeroPart(String),

    #[error("{0:?} is not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("{0:?} is not strictly decreasing")]
    NotStrict(Vec<u32>),

    #[error("partitions of different sizes cannot be compared: {0} vs {1}")]
    SizeMismatch(u32, u32),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("shifting needs strict partitions, got {lambda:?}/{mu:?}")]
    NonStrictShift { lambda: Vec<u32>, mu: Vec<u32> },

    #[error("expansion has non-integral coefficient {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
