use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("regularity {r} does not divide length {n}")]
    NonDivisible { n: u32, r: u32 },

    #[error("labels are not exactly 1..=n")]
    NonCanonicalLabels,

    #[error("enumeration of {required} items exceeds the cap of {cap}")]
    SizeLimit { required: String, cap: u64 },

    #[error("sequence lengths differ or are not multiples of the block size")]
    LengthMismatch,

    #[error("label {0} is not present in the sequence")]
    UnknownLabel(u32),

    #[error("operands do not share parameters: {0}")]
    ParamMismatch(String),

    #[error("invalid parameters: {0}")]
    ParamInvalid(String),

    #[error("minimum distance requires at least two codewords")]
    SingletonCode,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("{0} is not odd")]
    NotOdd(u32),

    #[error("semi-Latin square is invalid: {0}")]
    InvalidSquare(String),

    #[error("design is not the required Steiner system: {0}")]
    NotSteiner(String),

    #[error("invalid target distance: {0}")]
    DistanceInvalid(String),

    #[error("component code {index} has minimum Ulam distance {found}, need at least {required}")]
    ComponentDistanceUnverified {
        index: usize,
        required: u32,
        found: u32,
    },

    #[error("position {pos} is outside 1..={n}")]
    PositionOutOfRange { pos: u32, n: u32 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn size_limit(required: impl ToString, cap: u64) -> Self {
        Error::SizeLimit {
            required: required.to_string(),
            cap,
        }
    }
}
