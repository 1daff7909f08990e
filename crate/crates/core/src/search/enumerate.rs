//! Walks well-formed descriptions: descending letter tuples times count
//! tuples, under one of two length constraints.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::description::Block;
use crate::error::{Error, Result};
use crate::numeral::digit_len;
use crate::word::{Base, Letter};

/// Shared work counter; trips once `limit` units have been charged.
pub(crate) struct Budget {
    used: AtomicU64,
    limit: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget {
            used: AtomicU64::new(0),
            limit,
        }
    }

    pub(crate) fn charge(&self, units: u64) -> Result<()> {
        let before = self.used.fetch_add(units, Ordering::Relaxed);
        let now = before.saturating_add(units);
        if now > self.limit {
            return Err(Error::BudgetExceeded {
                needed: u128::from(now),
                budget: self.limit,
            });
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Shape {
    /// Counts sum to the rendered length, which is at most `limit`.
    SelfConsistent { limit: usize },
    /// Counts sum to at most `limit` (the preimage length) and the
    /// rendered word is at most `limit` long.
    ImageWithin { limit: usize },
}

/// Letters of a nonempty subset mask, descending.
fn letters_of(mask: u64, base: Base) -> Vec<Letter> {
    base.letters()
        .rev()
        .filter(|l| mask >> l.value() & 1 == 1)
        .collect()
}

/// Calls `f` once per nonempty letter subset and concatenates the results
/// in subset order, regardless of `parallel`.
pub(crate) fn over_subsets<T, F>(
    base: Base,
    parallel: bool,
    budget: &Budget,
    f: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[Letter]) -> Result<Vec<T>> + Sync,
{
    let subsets = (1u64 << base.get()) - 1;
    budget.charge(subsets)?;
    let run = |mask: u64| f(&letters_of(mask, base));
    let parts: Vec<Vec<T>> = if parallel {
        (1..=subsets)
            .into_par_iter()
            .map(run)
            .collect::<Result<_>>()?
    } else {
        (1..=subsets).map(run).collect::<Result<_>>()?
    };
    Ok(parts.into_iter().flatten().collect())
}

/// Calls `visit` with every count assignment over `letters` allowed by
/// `shape`.
pub(crate) fn over_counts<V>(
    base: Base,
    letters: &[Letter],
    shape: Shape,
    budget: &Budget,
    visit: &mut V,
) -> Result<()>
where
    V: FnMut(&[Block]) -> Result<()>,
{
    let mut blocks = Vec::with_capacity(letters.len());
    let walk = Walk {
        base,
        letters,
        shape,
        budget,
    };
    walk.go(&mut blocks, 0, 0, 0, visit)
}

struct Walk<'a> {
    base: Base,
    letters: &'a [Letter],
    shape: Shape,
    budget: &'a Budget,
}

impl Walk<'_> {
    fn go<V>(
        &self,
        blocks: &mut Vec<Block>,
        sum_count: u64,
        sum_len: usize,
        slack: i64,
        visit: &mut V,
    ) -> Result<()>
    where
        V: FnMut(&[Block]) -> Result<()>,
    {
        let j = blocks.len();
        if j == self.letters.len() {
            return match self.shape {
                Shape::SelfConsistent { .. } if slack != 0 => Ok(()),
                _ => visit(blocks),
            };
        }
        let rest = (self.letters.len() - j - 1) as u64;
        let letter = self.letters[j];
        let mut c = 1u64;
        loop {
            let len = sum_len + digit_len(c, self.base) + 1;
            // every later block renders to at least two letters
            let min_len = len + 2 * rest as usize;
            match self.shape {
                Shape::SelfConsistent { limit } => {
                    // count minus rendered length; never below -1 per block
                    let t = c as i64 - (len - sum_len) as i64;
                    if min_len > limit || c > limit as u64 || slack + t > rest as i64 {
                        break;
                    }
                    self.budget.charge(1)?;
                    blocks.push(Block { count: c, letter });
                    self.go(blocks, sum_count + c, len, slack + t, visit)?;
                    blocks.pop();
                }
                Shape::ImageWithin { limit } => {
                    if min_len > limit || sum_count + c + rest > limit as u64 {
                        break;
                    }
                    self.budget.charge(1)?;
                    blocks.push(Block { count: c, letter });
                    self.go(blocks, sum_count + c, len, slack, visit)?;
                    blocks.pop();
                }
            }
            c += 1;
        }
        Ok(())
    }
}
