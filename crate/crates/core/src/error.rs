use num_bigint::BigInt;
use thiserror::Error;

use crate::polyseries::IntPolynomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An exact polynomial division left a remainder.
    #[error("polynomial division is not exact, remainder {remainder}")]
    NotDivisible { remainder: IntPolynomial },

    #[error("denominator has zero constant term")]
    ZeroConstantTerm,

    /// Series inversion produced a non-integral coefficient.
    #[error("series coefficient at q^{exponent} is not an integer")]
    NonIntegralSeries { exponent: usize },

    #[error("insufficient precision: need coefficients up to q^{needed}, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },

    #[error("zero torus character on a tangent direction")]
    ZeroCharacter,

    #[error("assembled polynomial has a negative coefficient at q^{exponent}")]
    NegativeCoefficient { exponent: usize },

    #[error("l_max is not classified for d = {d}, r = {r}")]
    Unclassified { d: u64, r: u64 },

    #[error("parameters d = {d}, r = {r} lie outside every known R-locus regime")]
    RegimeError { d: u64, r: u64 },

    #[error("generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("algebra does not span the ambient space")]
    NotSpanning,

    #[error("search needs about {needed} work units, budget is {budget}")]
    SearchBudgetExceeded { needed: u128, budget: u64 },

    #[error("raw tuple count {total} is not divisible by |GL| = {gl_order}")]
    NotDivisibleByGL { total: BigInt, gl_order: BigInt },

    #[error("{what}: expected {expected}, got {actual}")]
    Mismatch {
        what: String,
        expected: String,
        actual: String,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
