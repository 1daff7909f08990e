//! Positional base-k numerals for block counts.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Base, Letter};

/// A positive integer written in base `k` without leading zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numeral {
    base: Base,
    // most significant digit first
    digits: Vec<u8>,
    value: u64,
}

/// Number of base-`k` digits of `n`. `n` must be positive.
#[inline]
pub fn digit_len(n: u64, base: Base) -> usize {
    debug_assert!(n > 0);
    n.ilog(u64::from(base.get())) as usize + 1
}

/// Appends the digits of `n` (most significant first) to `out`.
pub(crate) fn push_digits(mut n: u64, k: u64, out: &mut Vec<u8>) {
    debug_assert!(n > 0);
    let start = out.len();
    while n > 0 {
        out.push((n % k) as u8);
        n /= k;
    }
    out[start..].reverse();
}

impl Numeral {
    pub fn encode(n: u64, base: Base) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive);
        }
        let mut digits = Vec::with_capacity(digit_len(n, base));
        push_digits(n, u64::from(base.get()), &mut digits);
        Ok(Numeral {
            base,
            digits,
            value: n,
        })
    }

    /// Reads a digit string. Rejects empty input, a leading zero, digits
    /// outside the base, and values above `u64::MAX`.
    pub fn from_digits(base: Base, digits: &[Letter]) -> Result<Self> {
        let first = digits.first().ok_or(Error::EmptyNumeral)?;
        if first.value() == 0 {
            return Err(Error::LeadingZero);
        }
        let k = u64::from(base.get());
        let mut value = 0u64;
        let mut raw = Vec::with_capacity(digits.len());
        for d in digits {
            let v = base.letter(u32::from(d.value()))?.value();
            value = value
                .checked_mul(k)
                .and_then(|x| x.checked_add(u64::from(v)))
                .ok_or(Error::NumeralOverflow)?;
            raw.push(v);
        }
        Ok(Numeral {
            base,
            digits: raw,
            value,
        })
    }

    pub fn decode(&self) -> u64 {
        self.value
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> impl ExactSizeIterator<Item = Letter> + '_ {
        self.digits.iter().map(|&d| Letter::from_raw(d))
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; a numeral has at least one digit.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Digit count minus one: the exponent of the leading digit.
    pub fn order(&self) -> usize {
        self.digits.len() - 1
    }
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits() {
            write!(f, "{}", d.to_char())?;
        }
        Ok(())
    }
}
