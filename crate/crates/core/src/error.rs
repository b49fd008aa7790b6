use thiserror::Error;

use crate::poly::Monomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("coefficient of {monomial} is not an integer: {value}")]
    NonIntegral { monomial: Monomial, value: String },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("polynomial degree {degree} exceeds the factor-search bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("board size {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: u32, bound: u32 },

    #[error("malformed polynomial at {position}: {reason}")]
    Parse { position: String, reason: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
