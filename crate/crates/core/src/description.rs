//! Descriptions and the step map.
//!
//! The step map replaces a word by, for each letter present in descending
//! order, the letter's count written in base `k` followed by the letter.
//! The `(count, letter)` list behind that output is a [`Description`].

use std::fmt;

use crate::error::{Error, Result};
use crate::numeral::{digit_len, push_digits, Numeral};
use crate::word::{Base, Letter, Word};

/// One `count letter` unit of a description.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub count: u64,
    pub letter: Letter,
}

impl Block {
    pub fn new(count: u64, letter: Letter) -> Result<Self> {
        if count == 0 {
            return Err(Error::ZeroCount);
        }
        Ok(Block { count, letter })
    }

    /// Rendered length: numeral digits plus the letter.
    #[inline]
    pub fn rendered_len(&self, base: Base) -> usize {
        digit_len(self.count, base) + 1
    }

    /// Digit count of the numeral minus one.
    #[inline]
    pub fn order(&self, base: Base) -> usize {
        digit_len(self.count, base) - 1
    }
}

/// Nonempty block list with strictly descending letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Description {
    base: Base,
    blocks: Vec<Block>,
}

impl Description {
    pub fn new(base: Base, blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyDescription);
        }
        for b in &blocks {
            base.letter(u32::from(b.letter.value()))?;
            if b.count == 0 {
                return Err(Error::ZeroCount);
            }
        }
        if blocks.windows(2).any(|w| w[0].letter <= w[1].letter) {
            return Err(Error::UnorderedBlocks);
        }
        Ok(Description { base, blocks })
    }

    pub(crate) fn new_unchecked(base: Base, blocks: Vec<Block>) -> Self {
        debug_assert!(!blocks.is_empty());
        debug_assert!(blocks.windows(2).all(|w| w[0].letter > w[1].letter));
        Description { base, blocks }
    }

    /// Tallies `word`. Fails on the empty word, which has no blocks.
    pub fn of(word: &Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let blocks = word
            .count_letters()
            .present_descending()
            .map(|(letter, count)| Block { count, letter })
            .collect();
        Ok(Description {
            base: word.base(),
            blocks,
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks, between 1 and `k`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sum of the block counts.
    pub fn total_count(&self) -> u64 {
        self.blocks.iter().map(|b| b.count).sum()
    }

    /// Length of [`render`](Self::render) without building it.
    pub fn rendered_len(&self) -> usize {
        self.blocks.iter().map(|b| b.rendered_len(self.base)).sum()
    }

    /// Concatenation of `numeral(count) letter` over the blocks.
    pub fn render(&self) -> Word {
        let mut out = Vec::with_capacity(self.rendered_len());
        render_into(self.base, &self.blocks, &mut out);
        Word::from_raw_unchecked(self.base, out)
    }

    pub fn numerals(&self) -> impl Iterator<Item = Numeral> + '_ {
        self.blocks
            .iter()
            .map(|b| Numeral::encode(b.count, self.base).expect("counts are positive"))
    }
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", b.count, b.letter)?;
        }
        f.write_str("]")
    }
}

pub(crate) fn render_into(base: Base, blocks: &[Block], out: &mut Vec<u8>) {
    let k = u64::from(base.get());
    for b in blocks {
        push_digits(b.count, k, out);
        out.push(b.letter.value());
    }
}

/// Raw step on letter values: writes the image of `word` into `out`.
///
/// `out` is cleared first. An empty input yields an empty output.
pub fn step_raw(k: u8, word: &[u8], out: &mut Vec<u8>) {
    let mut counts = [0u64; 36];
    for &l in word {
        counts[l as usize] += 1;
    }
    out.clear();
    let kk = u64::from(k);
    for letter in (0..k).rev() {
        let c = counts[letter as usize];
        if c > 0 {
            push_digits(c, kk, out);
            out.push(letter);
        }
    }
}

impl Word {
    /// The description of this word. Fails on the empty word.
    pub fn describe(&self) -> Result<Description> {
        Description::of(self)
    }

    /// One application of the step map; the empty word maps to itself.
    pub fn step(&self) -> Word {
        let mut out = Vec::with_capacity(2 * self.base().get() as usize);
        step_raw(self.base().get() as u8, self.as_raw(), &mut out);
        Word::from_raw_unchecked(self.base(), out)
    }

    pub fn is_fixed_point(&self) -> bool {
        !self.is_empty() && self.step() == *self
    }
}
