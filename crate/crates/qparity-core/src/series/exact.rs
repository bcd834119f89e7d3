//! Dense exact series with `BigInt` coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ParitySeries, SeriesError, Sign};

/// A formal power series truncated at an inclusive order `N`, with exact
/// arbitrary-precision integer coefficients indexed `0..=N`.
///
/// Values are immutable from the caller's point of view: every operation is a
/// pure function of its inputs. Coefficient growth is unbounded by design;
/// reciprocal Pochhammer products reach partition-function magnitudes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Series {
        Series {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Series {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Build a series from `(exponent, coefficient)` pairs; exponents must be
    /// distinct and no larger than `order`.
    pub fn make(order: usize, terms: &[(usize, i64)]) -> Result<Series, SeriesError> {
        let mut s = Series::zero(order);
        let mut seen = vec![false; order + 1];
        for &(exponent, coefficient) in terms {
            if exponent > order {
                return Err(SeriesError::ExponentOutOfRange { exponent, order });
            }
            if seen[exponent] {
                return Err(SeriesError::DuplicateExponent { exponent });
            }
            seen[exponent] = true;
            s.coeffs[exponent] = BigInt::from(coefficient);
        }
        Ok(s)
    }

    /// `coefficient * q^exponent`.
    pub fn monomial(order: usize, exponent: usize, coefficient: i64) -> Result<Series, SeriesError> {
        Series::make(order, &[(exponent, coefficient)])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The exact coefficient of `q^n`.
    pub fn coefficient(&self, n: usize) -> Result<&BigInt, SeriesError> {
        if n > self.order {
            return Err(SeriesError::ExponentOutOfRange {
                exponent: n,
                order: self.order,
            });
        }
        Ok(&self.coeffs[n])
    }

    /// All coefficients, indexed by exponent.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Series) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (c, d) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c += d;
        }
        Ok(out)
    }

    /// Coefficientwise difference.
    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (c, d) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c -= d;
        }
        Ok(out)
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_order(other)?;
        let mut out = Series::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// `self * (1 + sign * q^e)` in a single pass.
    pub fn mul_binomial(&self, sign: Sign, e: usize) -> Result<Series, SeriesError> {
        let mut out = self.clone();
        out.mul_binomial_assign(sign, e)?;
        Ok(out)
    }

    /// `self / (1 + sign * q^e)`: the unique preimage of [`Series::mul_binomial`].
    pub fn div_binomial(&self, sign: Sign, e: usize) -> Result<Series, SeriesError> {
        let mut out = self.clone();
        out.div_binomial_assign(sign, e)?;
        Ok(out)
    }

    /// In-place multiply by `(1 + sign * q^e)`; `t[i] = s[i] + sign * s[i-e]`.
    pub(crate) fn mul_binomial_assign(&mut self, sign: Sign, e: usize) -> Result<(), SeriesError> {
        if e == 0 {
            return Err(SeriesError::ZeroBinomialExponent);
        }
        if e > self.order {
            return Ok(()); // factor is invisible at this order
        }
        match sign {
            Sign::Plus => {
                for i in (e..=self.order).rev() {
                    let (lo, hi) = self.coeffs.split_at_mut(i);
                    hi[0] += &lo[i - e];
                }
            }
            Sign::Minus => {
                for i in (e..=self.order).rev() {
                    let (lo, hi) = self.coeffs.split_at_mut(i);
                    hi[0] -= &lo[i - e];
                }
            }
        }
        Ok(())
    }

    /// In-place divide by `(1 + sign * q^e)`; the recurrence
    /// `t[i] = s[i] - sign * t[i-e]` inverts the binomial exactly.
    pub(crate) fn div_binomial_assign(&mut self, sign: Sign, e: usize) -> Result<(), SeriesError> {
        if e == 0 {
            return Err(SeriesError::ZeroBinomialExponent);
        }
        if e > self.order {
            return Ok(());
        }
        match sign {
            Sign::Plus => {
                for i in e..=self.order {
                    let (lo, hi) = self.coeffs.split_at_mut(i);
                    hi[0] -= &lo[i - e];
                }
            }
            Sign::Minus => {
                for i in e..=self.order {
                    let (lo, hi) = self.coeffs.split_at_mut(i);
                    hi[0] += &lo[i - e];
                }
            }
        }
        Ok(())
    }

    /// Add `weight * q^exponent` in place; exponents beyond the order are
    /// dropped (used by theta builders, whose tails are intentionally cut).
    pub(crate) fn add_term_saturating(&mut self, exponent: usize, weight: i64) {
        if exponent <= self.order {
            self.coeffs[exponent] += BigInt::from(weight);
        }
    }

    /// Smallest exponent at which the two series differ, if any.
    pub fn first_difference(&self, other: &Series) -> Result<Option<usize>, SeriesError> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }

    /// Coefficientwise equality (orders must match to be equal).
    pub fn equal(&self, other: &Series) -> bool {
        self == other
    }

    /// Reduce every coefficient mod 2.
    pub fn to_parity(&self) -> ParitySeries {
        let mut p = ParitySeries::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_odd() {
                p.set_bit(i, true);
            }
        }
        p
    }
}

trait IsOdd {
    fn is_odd(&self) -> bool;
}

impl IsOdd for BigInt {
    fn is_odd(&self) -> bool {
        !self.is_zero() && self.abs() % 2 == BigInt::one()
    }
}
