use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by the algebra kernel and the rules built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("pole at t = {0}")]
    Pole(BigRational),

    #[error("invalid partition {0:?}: {1}")]
    InvalidPartition(Vec<i64>, &'static str),

    #[error("not a horizontal strip: {lambda:?}/{mu:?}")]
    NotHorizontalStrip { lambda: Vec<u32>, mu: Vec<u32> },

    #[error("not in Gamma: p_{0:?} has an even part")]
    NotInGamma(Vec<u32>),

    #[error("Pfaffian of an odd-dimensional ({0}x{0}) matrix")]
    OddDimension(usize),

    #[error("matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),

    #[error("{mu:?} is not contained in {lambda:?}")]
    NotContained { lambda: Vec<u32>, mu: Vec<u32> },

    #[error("degree mismatch: |{lambda:?}| - |{mu:?}| is not a positive multiple of {s}")]
    DegreeMismatch { lambda: Vec<u32>, mu: Vec<u32>, s: u32 },

    #[error("s = {0} must be an odd positive integer")]
    EvenS(u32),

    #[error("not a symmetric horizontal strip: {lambda:?}/{mu:?} for s = {s}")]
    NotStrip { lambda: Vec<u32>, mu: Vec<u32>, s: u32 },

    #[error("straightening move a = {a} out of range for parts ({low}, {high})")]
    MoveOutOfRange { low: i64, high: i64, a: i64 },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("config: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
