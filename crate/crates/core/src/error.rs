use thiserror::Error;

/// Errors raised by series, array and expansion operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term must be zero")]
    NonzeroConstant,
    #[error("constant term must be one")]
    ConstantNotOne,
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("linear coefficient must be invertible")]
    ZeroLinear,
    #[error("index {index} is beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("series must have g0 = 1")]
    Unsupported,
    #[error("no B-sequence: not a pseudo-involution")]
    NotPseudoInvolution,
    #[error("odd part s(x) has nonzero coefficient at even index {0}")]
    EvenCoefficient(usize),
    #[error("invalid Riordan array: {0}")]
    InvalidArray(&'static str),
    #[error("partition size must be at least 1")]
    EmptyPartition,
    #[error("parameter out of range")]
    InvalidParameter,
    #[error("polynomial is not divisible by the given linear factor")]
    NotDivisible,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
