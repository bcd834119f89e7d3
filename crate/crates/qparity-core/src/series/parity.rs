//! Bit-packed series over GF(2): one bit per coefficient.

use super::{SeriesError, Sign};

const WORD_BITS: usize = 64;

/// A truncated series with coefficients reduced mod 2, packed 64 per word.
///
/// `bits[i]` is the parity of the coefficient of `q^i`. Reduction is a ring
/// homomorphism from [`super::Series`], so every congruence chain can run on
/// this fast path and be cross-checked against exact-then-reduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySeries {
    order: usize,
    words: Vec<u64>,
}

fn word_count(order: usize) -> usize {
    order / WORD_BITS + 1
}

impl ParitySeries {
    pub fn zero(order: usize) -> ParitySeries {
        ParitySeries {
            order,
            words: vec![0; word_count(order)],
        }
    }

    pub fn one(order: usize) -> ParitySeries {
        let mut p = ParitySeries::zero(order);
        p.words[0] = 1;
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The parity bit of `q^n`.
    pub fn bit(&self, n: usize) -> Result<bool, SeriesError> {
        if n > self.order {
            return Err(SeriesError::ExponentOutOfRange {
                exponent: n,
                order: self.order,
            });
        }
        Ok(self.words[n / WORD_BITS] >> (n % WORD_BITS) & 1 == 1)
    }

    pub(crate) fn set_bit(&mut self, n: usize, value: bool) {
        let mask = 1u64 << (n % WORD_BITS);
        if value {
            self.words[n / WORD_BITS] |= mask;
        } else {
            self.words[n / WORD_BITS] &= !mask;
        }
    }

    fn toggle_bit(&mut self, n: usize) {
        self.words[n / WORD_BITS] ^= 1u64 << (n % WORD_BITS);
    }

    /// Exponents with odd coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * WORD_BITS + b);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_order(&self, other: &ParitySeries) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Mask out bits above the truncation order so equality stays bitwise.
    fn clear_excess(&mut self) {
        let top = self.order % WORD_BITS;
        let last = self.words.len() - 1;
        if top + 1 < WORD_BITS {
            self.words[last] &= (1u64 << (top + 1)) - 1;
        }
    }

    /// Sum mod 2 (XOR).
    pub fn add(&self, other: &ParitySeries) -> Result<ParitySeries, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (w, v) in out.words.iter_mut().zip(&other.words) {
            *w ^= v;
        }
        Ok(out)
    }

    /// Carry-less truncated product.
    pub fn mul(&self, other: &ParitySeries) -> Result<ParitySeries, SeriesError> {
        self.check_order(other)?;
        let mut out = ParitySeries::zero(self.order);
        for i in self.support() {
            xor_shifted(&mut out.words, &other.words, i);
        }
        out.clear_excess();
        Ok(out)
    }

    /// `self * (1 + q^e)` mod 2 (the sign is invisible in GF(2)).
    pub fn mul_binomial(&self, _sign: Sign, e: usize) -> Result<ParitySeries, SeriesError> {
        let mut out = self.clone();
        out.mul_binomial_assign(_sign, e)?;
        Ok(out)
    }

    /// `self / (1 + q^e)` mod 2.
    pub fn div_binomial(&self, _sign: Sign, e: usize) -> Result<ParitySeries, SeriesError> {
        let mut out = self.clone();
        out.div_binomial_assign(_sign, e)?;
        Ok(out)
    }

    pub(crate) fn mul_binomial_assign(&mut self, _sign: Sign, e: usize) -> Result<(), SeriesError> {
        if e == 0 {
            return Err(SeriesError::ZeroBinomialExponent);
        }
        if e > self.order {
            return Ok(());
        }
        let snapshot = self.words.clone();
        xor_shifted(&mut self.words, &snapshot, e);
        self.clear_excess();
        Ok(())
    }

    pub(crate) fn div_binomial_assign(&mut self, _sign: Sign, e: usize) -> Result<(), SeriesError> {
        if e == 0 {
            return Err(SeriesError::ZeroBinomialExponent);
        }
        // t[i] = s[i] xor t[i-e], ascending
        for i in e..=self.order {
            if self.bit(i - e).expect("in range") {
                self.toggle_bit(i);
            }
        }
        Ok(())
    }

    pub(crate) fn add_term_saturating(&mut self, exponent: usize, weight: i64) {
        if exponent <= self.order && weight % 2 != 0 {
            self.toggle_bit(exponent);
        }
    }

    /// Smallest exponent where the two parity series differ.
    pub fn first_difference(&self, other: &ParitySeries) -> Result<Option<usize>, SeriesError> {
        self.check_order(other)?;
        for (w, (&a, &b)) in self.words.iter().zip(&other.words).enumerate() {
            if a != b {
                return Ok(Some(w * WORD_BITS + (a ^ b).trailing_zeros() as usize));
            }
        }
        Ok(None)
    }
}

/// XOR `src << shift` (in bits) into `dst`, dropping overflow words.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let word_shift = shift / WORD_BITS;
    let bit_shift = shift % WORD_BITS;
    for (k, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let lo = k + word_shift;
        if lo >= dst.len() {
            break;
        }
        dst[lo] ^= w << bit_shift;
        if bit_shift > 0 && lo + 1 < dst.len() {
            dst[lo + 1] ^= w >> (WORD_BITS - bit_shift);
        }
    }
}
