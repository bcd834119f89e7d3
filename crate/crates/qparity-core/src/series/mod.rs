//! Exact truncated formal power series over arbitrary-precision integers,
//! together with a bit-packed mod-2 variant.
//!
//! Every series carries an inclusive truncation order `N` fixed at
//! construction; all arithmetic is exact up to that order, and operations on
//! series of different orders are rejected rather than silently re-truncated.
//! Infinite products are consumed one binomial factor `(1 ± q^e)` at a time
//! via [`Series::mul_binomial`] / [`Series::div_binomial`], which is all the
//! generality the product catalogs need.

mod exact;
mod parity;
mod ring;

pub use exact::Series;
pub use parity::ParitySeries;
pub use ring::SeriesRing;

use std::fmt;

/// Sign of the non-constant term in a binomial factor `1 + sign * q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign as a signed unit, `+1` or `-1`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Errors raised by series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Two operands have different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// A term exponent exceeds the truncation order.
    ExponentOutOfRange { exponent: usize, order: usize },
    /// A term list mentions the same exponent twice.
    DuplicateExponent { exponent: usize },
    /// A binomial factor with `e = 0` would change the unit term.
    ZeroBinomialExponent,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            SeriesError::ExponentOutOfRange { exponent, order } => {
                write!(f, "exponent {exponent} exceeds truncation order {order}")
            }
            SeriesError::DuplicateExponent { exponent } => {
                write!(f, "duplicate exponent {exponent} in term list")
            }
            SeriesError::ZeroBinomialExponent => {
                write!(f, "binomial factor must have exponent >= 1")
            }
        }
    }
}

impl std::error::Error for SeriesError {}
