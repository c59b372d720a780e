use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("not a permutation of 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },
    #[error("malformed x-ray: {0}")]
    InvalidXRay(String),
    #[error("x-ray entry {index} is not an integer")]
    NonIntegerXRay { index: usize },
    #[error("malformed characteristic: {0}")]
    InvalidCharacteristic(String),
    #[error("malformed difference multiset: {0}")]
    InvalidMultiset(String),
    #[error("malformed pairing: {0}")]
    InvalidPairing(String),
    #[error("malformed skolem sequence at value {value}: {reason}")]
    InvalidSequence { value: u64, reason: String },
    #[error("skolem sequence has odd length {0}")]
    OddSequenceLength(usize),
    #[error("pairing is not extremal: pair ({s}, {t}) does not straddle {n}")]
    NotExtremal { s: usize, t: usize, n: usize },
    #[error("not a fixed-point-free involution: {0}")]
    NotInvolution(String),
    #[error("difference {value} is out of range 1..{bound}")]
    DifferenceOutOfRange { value: u64, bound: u64 },
    #[error("order {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not doubly stochastic: {0}")]
    NotDoublyStochastic(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}
