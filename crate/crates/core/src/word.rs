//! Alphabets, letters and words.
//!
//! A word is a raw sequence of letters over `{0, .., k-1}`. It is never read
//! as a number, so leading zeros are significant: `0110` and `110` are
//! different words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest base with a text rendering (`0-9a-z`).
pub const MAX_BASE: u32 = 36;

/// The radix `k` of the alphabet `{0, .., k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Base(u8);

impl Base {
    pub fn new(k: u32) -> Result<Self> {
        if (2..=MAX_BASE).contains(&k) {
            Ok(Base(k as u8))
        } else {
            Err(Error::InvalidBase(k))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        u32::from(self.0)
    }

    /// All letters of the alphabet in ascending order.
    pub fn letters(self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        (0..self.0).map(Letter)
    }

    /// Letter for `value`, if it belongs to this alphabet.
    pub fn letter(self, value: u32) -> Result<Letter> {
        if value < self.get() {
            Ok(Letter(value as u8))
        } else {
            Err(Error::InvalidLetter {
                letter: value,
                base: self.0,
            })
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let k = s.trim().parse::<u32>().map_err(|_| Error::InvalidBase(0))?;
        Base::new(k)
    }
}

/// One symbol of `{0, .., k-1}`. Letters order by numeric value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    pub(crate) const fn from_raw(v: u8) -> Self {
        Letter(v)
    }

    /// Text form: `0-9` then `a-z`.
    pub fn to_char(self) -> char {
        char::from_digit(u32::from(self.0), MAX_BASE).expect("letters are below 36")
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite, possibly empty, sequence of letters over one base.
///
/// Words compare by base first and then by letter sequence, so within one
/// base the order is lexicographic with a proper prefix sorting first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    base: Base,
    letters: Vec<u8>,
}

impl Word {
    pub fn empty(base: Base) -> Self {
        Word {
            base,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(base: Base, letters: &[Letter]) -> Result<Self> {
        let raw: Vec<u8> = letters.iter().map(|l| l.0).collect();
        Self::from_raw(base, raw)
    }

    /// Builds a word from raw letter values, checking each against `base`.
    pub fn from_raw(base: Base, letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| u32::from(l) >= base.get()) {
            return Err(Error::InvalidLetter {
                letter: u32::from(bad),
                base: base.0,
            });
        }
        Ok(Word { base, letters })
    }

    pub(crate) fn from_raw_unchecked(base: Base, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| u32::from(l) < base.get()));
        Word { base, letters }
    }

    /// Parses the `0-9a-z` text form. Case-insensitive.
    pub fn parse(text: &str, base: Base) -> Result<Self> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(position, ch)| match ch.to_digit(MAX_BASE) {
                Some(v) if v < base.get() => Ok(v as u8),
                _ => Err(Error::InvalidCharacter {
                    ch,
                    position,
                    base: base.0,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { base, letters })
    }

    #[inline]
    pub fn base(&self) -> Base {
        self.base
    }

    /// `|x|`, the number of letters.
    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl ExactSizeIterator<Item = Letter> + '_ {
        self.letters.iter().map(|&l| Letter(l))
    }

    #[inline]
    pub fn as_raw(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_raw(self) -> Vec<u8> {
        self.letters
    }

    /// `|x|_i` for every letter `i` of the alphabet.
    pub fn count_letters(&self) -> LetterCounts {
        let mut counts = vec![0u64; self.base.0 as usize];
        for &l in &self.letters {
            counts[l as usize] += 1;
        }
        LetterCounts {
            base: self.base,
            counts,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// Occurrence count of every letter of a base in some word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterCounts {
    base: Base,
    counts: Vec<u64>,
}

impl LetterCounts {
    pub fn base(&self) -> Base {
        self.base
    }

    /// Count of `letter`; zero for letters absent from the word.
    pub fn get(&self, letter: Letter) -> u64 {
        self.counts.get(letter.0 as usize).copied().unwrap_or(0)
    }

    /// Sum over all letters, which equals the word length.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(letter, count)` for every letter of the base, ascending.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Letter, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (Letter(i as u8), c))
    }

    /// Letters with a nonzero count, in strictly descending order.
    pub fn present_descending(&self) -> impl Iterator<Item = (Letter, u64)> + '_ {
        self.iter().rev().filter(|&(_, c)| c > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(k: u32) -> Base {
        Base::new(k).unwrap()
    }

    #[test]
    fn base_range() {
        assert!(Base::new(1).is_err());
        assert!(Base::new(0).is_err());
        assert!(Base::new(37).is_err());
        assert_eq!(Base::new(36).unwrap().get(), 36);
        assert_eq!("10".parse::<Base>().unwrap(), b(10));
        assert!("x".parse::<Base>().is_err());
    }

    #[test]
    fn counts_of_start_word_123() {
        let w = Word::parse("123", b(10)).unwrap();
        let c = w.count_letters();
        for (l, n) in c.iter() {
            let expect = if (1..=3).contains(&l.value()) { 1 } else { 0 };
            assert_eq!(n, expect, "letter {l}");
        }
        assert_eq!(c.total(), 3);
    }

    #[test]
    fn counts_of_empty_word_are_zero() {
        let c = Word::empty(b(4)).count_letters();
        assert!(c.iter().all(|(_, n)| n == 0));
        assert_eq!(c.total(), 0);
    }

    #[test]
    fn counts_of_binary_fixed_point() {
        let c = Word::parse("1001110", b(2)).unwrap().count_letters();
        assert_eq!(c.get(b(2).letter(1).unwrap()), 4);
        assert_eq!(c.get(b(2).letter(0).unwrap()), 3);
    }

    #[test]
    fn leading_zeros_are_significant() {
        let a = Word::parse("0110", b(2)).unwrap();
        let c = Word::parse("110", b(2)).unwrap();
        assert_ne!(a, c);
        assert_eq!(a.len(), 4);
    }

    #[test]
    fn parse_reports_position() {
        let err = Word::parse("1021", b(2)).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidCharacter {
                ch: '2',
                position: 2,
                base: 2
            }
        );
        assert!(Word::parse("12-", b(10)).is_err());
    }

    #[test]
    fn text_round_trip_high_base() {
        let w = Word::parse("z0a9", b(36)).unwrap();
        assert_eq!(w.as_raw(), &[35, 0, 10, 9]);
        assert_eq!(w.to_string(), "z0a9");
        assert_eq!(Word::parse("Z", b(36)).unwrap().to_string(), "z");
    }

    #[test]
    fn from_raw_checks_letters() {
        assert!(Word::from_raw(b(3), vec![0, 1, 2]).is_ok());
        assert_eq!(
            Word::from_raw(b(3), vec![3]).unwrap_err(),
            Error::InvalidLetter { letter: 3, base: 3 }
        );
    }

    #[test]
    fn ordering_is_lexicographic_prefix_first() {
        let k = b(3);
        let mut ws: Vec<Word> = ["12", "1", "0", "10", "2"]
            .iter()
            .map(|s| Word::parse(s, k).unwrap())
            .collect();
        ws.sort();
        let s: Vec<String> = ws.iter().map(Word::to_string).collect();
        assert_eq!(s, ["0", "1", "10", "12", "2"]);
    }
}
