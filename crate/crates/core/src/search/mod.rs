//! Complete enumeration of fixed points and cycles for one base.
//!
//! A fixed point renders its own description, and every cycle word is the
//! image of its predecessor, so both searches walk descriptions (letter
//! subsets times count tuples) rather than words. [`brute_force_classify`]
//! walks every word instead and serves as the completeness oracle.

mod brute;
mod cycles;
mod enumerate;
mod fixed;
mod inequality;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynamics::{length_cap, DEFAULT_MAX_STEPS};
use crate::error::{Error, Result};
use crate::word::{Base, Word};

pub use brute::{brute_force_classify, brute_force_classify_with, verify_binary_convergence};
pub use cycles::{enumerate_cycles, enumerate_cycles_with};
pub use fixed::{enumerate_fixed_points, enumerate_fixed_points_with};
pub use inequality::{
    cycle_condition_holds, cycle_condition_holds_for, fixed_point_condition_holds,
};

/// Default cap on search work (words tested, or descriptions visited).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Knobs shared by the search entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Word length limit; defaults to the eventual length bound of the base.
    pub length_limit: Option<usize>,
    /// Added on top of the length limit.
    pub margin: usize,
    pub max_steps: usize,
    pub budget: u64,
    /// Fan out over letter subsets. Output is identical either way.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            length_limit: None,
            margin: 0,
            max_steps: DEFAULT_MAX_STEPS,
            budget: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

impl SearchConfig {
    pub fn effective_limit(&self, base: Base) -> usize {
        self.length_limit.unwrap_or_else(|| length_cap(base)) + self.margin
    }
}

/// A cycle of the step map with period `p`, rotated so that its
/// lexicographically smallest word comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleRecord {
    base: Base,
    words: Vec<Word>,
}

impl CycleRecord {
    /// Validates that `words` is a cycle in order and canonicalizes its
    /// rotation.
    pub fn new(words: Vec<Word>) -> Result<Self> {
        let first = words.first().ok_or(Error::NotACycle)?;
        let base = first.base();
        if words.iter().any(|w| w.base() != base) {
            return Err(Error::MixedBases);
        }
        if words.iter().any(Word::is_empty) {
            return Err(Error::EmptyWord);
        }
        let p = words.len();
        for i in 0..p {
            if words[i].step() != words[(i + 1) % p] {
                return Err(Error::NotACycle);
            }
        }
        let mut sorted: Vec<&Word> = words.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotACycle);
        }
        Ok(Self::canonical(words))
    }

    pub(crate) fn canonical(mut words: Vec<Word>) -> Self {
        let base = words[0].base();
        let (min_at, _) = words
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .expect("nonempty");
        words.rotate_left(min_at);
        CycleRecord { base, words }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn period(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }
}

impl PartialOrd for CycleRecord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Cycles order by period, then by their word lists.
impl Ord for CycleRecord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.base, self.period(), &self.words).cmp(&(other.base, other.period(), &other.words))
    }
}

impl fmt::Display for CycleRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DescriptionSearch,
    Exhaustive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DescriptionSearch => "description-search",
            Method::Exhaustive => "exhaustive",
        })
    }
}

/// All fixed points and cycles found for one base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub base: Base,
    /// Sorted by length, then lexicographically.
    pub fixed_points: Vec<Word>,
    /// Period at least 2, sorted by period then first word.
    pub cycles: Vec<CycleRecord>,
    pub search_length_limit: usize,
    pub method: Method,
    /// Seeds or words the search examined.
    pub words_tested: u64,
}

/// Output order for fixed points: length, then lexicographic.
pub fn sort_fixed_points(words: &mut [Word]) {
    words.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
}
