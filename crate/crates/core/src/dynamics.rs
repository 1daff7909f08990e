//! Orbits of the step map and the eventual length bound.
//!
//! Every orbit is eventually periodic: long words shrink under the step map
//! until they fall below `ceil(2k^2 / (k-1))` letters, and only finitely many
//! words are that short.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::word::{Base, Word};

/// Step budget used when the caller has no opinion.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// Where one starting word ends up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitResult {
    pub start: Word,
    /// Steps before the orbit first enters its cycle.
    pub transient: usize,
    pub period: usize,
    /// The cycle, starting at the first element the orbit reaches.
    pub cycle: Vec<Word>,
    pub steps_taken: usize,
}

impl OrbitResult {
    pub fn is_fixed_point(&self) -> bool {
        self.period == 1
    }

    pub fn max_cycle_len(&self) -> usize {
        self.cycle.iter().map(Word::len).max().unwrap_or(0)
    }
}

/// Iterates the step map from `start` until a word repeats.
///
/// Visited words are kept in a map to their first index, so the transient
/// and period come out exactly in one pass.
pub fn orbit(start: &Word, max_steps: usize) -> Result<OrbitResult> {
    if start.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut visited: HashMap<Word, usize> = HashMap::new();
    let mut path = vec![start.clone()];
    visited.insert(start.clone(), 0);
    for steps in 1..=max_steps {
        let next = path[steps - 1].step();
        if let Some(&first) = visited.get(&next) {
            let cycle = path.split_off(first);
            return Ok(OrbitResult {
                start: start.clone(),
                transient: first,
                period: steps - first,
                cycle,
                steps_taken: steps,
            });
        }
        visited.insert(next.clone(), steps);
        path.push(next);
    }
    Err(Error::OrbitLimitExceeded { max_steps })
}

/// The eventual length cap and the number of words at or below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInfo {
    pub base: Base,
    /// `ceil(2k^2 / (k-1))`.
    pub length_bound: usize,
    /// `k + k^2 + ... + k^length_bound`.
    pub words_up_to_bound: BigUint,
}

/// `ceil(2k^2 / (k-1))`.
pub fn length_cap(base: Base) -> usize {
    let k = base.get() as usize;
    (2 * k * k).div_ceil(k - 1)
}

/// Number of nonempty words of length at most `max_len`:
/// `(k^(max_len+1) - k) / (k-1)`.
pub fn words_up_to(base: Base, max_len: usize) -> BigUint {
    let k = BigUint::from(base.get());
    let top = k.pow(max_len as u32 + 1);
    (top - &k) / (k - 1u32)
}

pub fn length_bound(base: Base) -> BoundInfo {
    let length_bound = length_cap(base);
    BoundInfo {
        base,
        length_bound,
        words_up_to_bound: words_up_to(base, length_bound),
    }
}

/// Runs the orbit of `start` and reports whether every word of its cycle
/// fits under [`length_cap`].
pub fn eventual_length_ok(start: &Word, max_steps: usize) -> Result<bool> {
    let o = orbit(start, max_steps)?;
    Ok(o.max_cycle_len() <= length_cap(start.base()))
}
