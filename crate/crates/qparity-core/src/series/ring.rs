//! A small trait unifying the exact and mod-2 coefficient rings.
//!
//! The product/theta/sum builders are written once against this trait; the
//! exact instantiation feeds identity verification, the parity instantiation
//! feeds congruence work at orders where exact coefficients would be wasteful.
//! All builder-side operands share one truncation order by construction, so
//! the trait methods treat an order mismatch as a programming error.

use super::{ParitySeries, Series, Sign};

pub trait SeriesRing: Clone + PartialEq {
    fn zero(order: usize) -> Self;
    fn one(order: usize) -> Self;
    fn order(&self) -> usize;

    /// `self += other` (equal orders).
    fn accumulate(&mut self, other: &Self);

    /// `self += weight * q^exponent`, dropping exponents beyond the order.
    fn add_term(&mut self, exponent: usize, weight: i64);

    /// Truncated product (equal orders).
    fn mul_trunc(&self, other: &Self) -> Self;

    /// `self *= (1 + sign * q^e)`, `e >= 1`.
    fn mul_binomial_assign(&mut self, sign: Sign, e: usize);

    /// `self /= (1 + sign * q^e)`, `e >= 1`.
    fn div_binomial_assign(&mut self, sign: Sign, e: usize);

    /// Smallest exponent where the operands differ.
    fn first_difference(&self, other: &Self) -> Option<usize>;
}

impl SeriesRing for Series {
    fn zero(order: usize) -> Self {
        Series::zero(order)
    }

    fn one(order: usize) -> Self {
        Series::one(order)
    }

    fn order(&self) -> usize {
        self.order()
    }

    fn accumulate(&mut self, other: &Self) {
        *self = self.add(other).expect("builder operands share one order");
    }

    fn add_term(&mut self, exponent: usize, weight: i64) {
        self.add_term_saturating(exponent, weight);
    }

    fn mul_trunc(&self, other: &Self) -> Self {
        self.mul(other).expect("builder operands share one order")
    }

    fn mul_binomial_assign(&mut self, sign: Sign, e: usize) {
        Series::mul_binomial_assign(self, sign, e).expect("builder exponent >= 1");
    }

    fn div_binomial_assign(&mut self, sign: Sign, e: usize) {
        Series::div_binomial_assign(self, sign, e).expect("builder exponent >= 1");
    }

    fn first_difference(&self, other: &Self) -> Option<usize> {
        Series::first_difference(self, other).expect("builder operands share one order")
    }
}

impl SeriesRing for ParitySeries {
    fn zero(order: usize) -> Self {
        ParitySeries::zero(order)
    }

    fn one(order: usize) -> Self {
        ParitySeries::one(order)
    }

    fn order(&self) -> usize {
        self.order()
    }

    fn accumulate(&mut self, other: &Self) {
        *self = self.add(other).expect("builder operands share one order");
    }

    fn add_term(&mut self, exponent: usize, weight: i64) {
        self.add_term_saturating(exponent, weight);
    }

    fn mul_trunc(&self, other: &Self) -> Self {
        self.mul(other).expect("builder operands share one order")
    }

    fn mul_binomial_assign(&mut self, sign: Sign, e: usize) {
        ParitySeries::mul_binomial_assign(self, sign, e).expect("builder exponent >= 1");
    }

    fn div_binomial_assign(&mut self, sign: Sign, e: usize) {
        ParitySeries::div_binomial_assign(self, sign, e).expect("builder exponent >= 1");
    }

    fn first_difference(&self, other: &Self) -> Option<usize> {
        ParitySeries::first_difference(self, other).expect("builder operands share one order")
    }
}
