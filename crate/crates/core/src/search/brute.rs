//! Exhaustive classification over every word up to a length. Slow, but it
//! shares nothing with the description walk and so certifies it.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::description::step_raw;
use crate::dynamics::{orbit, words_up_to, DEFAULT_MAX_STEPS};
use crate::error::{Error, Result};
use crate::search::{sort_fixed_points, ClassificationReport, CycleRecord, Method, DEFAULT_BUDGET};
use crate::word::{Base, Word};

pub fn brute_force_classify(base: Base, max_len: usize) -> Result<ClassificationReport> {
    brute_force_classify_with(base, max_len, DEFAULT_BUDGET, DEFAULT_MAX_STEPS)
}

/// Tests every nonempty word of length at most `max_len`: directly for
/// fixed points, and by following its orbit for cycles.
pub fn brute_force_classify_with(
    base: Base,
    max_len: usize,
    budget: u64,
    max_steps: usize,
) -> Result<ClassificationReport> {
    let total = words_up_to(base, max_len);
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: u128::try_from(&total).unwrap_or(u128::MAX),
            budget,
        });
    }
    let k = base.get() as u8;
    let mut resolver = Resolver::new(k, max_steps);
    let mut fixed = Vec::new();
    let mut image = Vec::new();
    let mut tested = 0u64;
    for len in 1..=max_len {
        let mut word = vec![0u8; len];
        loop {
            tested += 1;
            step_raw(k, &word, &mut image);
            if image == word {
                fixed.push(Word::from_raw_unchecked(base, word.clone()));
            }
            resolver.resolve(&image)?;
            if !advance(&mut word, k) {
                break;
            }
        }
    }
    sort_fixed_points(&mut fixed);
    let cycles: BTreeSet<CycleRecord> = resolver
        .cycles
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| {
            CycleRecord::canonical(
                c.into_iter()
                    .map(|w| Word::from_raw_unchecked(base, w))
                    .collect(),
            )
        })
        .collect();
    Ok(ClassificationReport {
        base,
        fixed_points: fixed,
        cycles: cycles.into_iter().collect(),
        search_length_limit: max_len,
        method: Method::Exhaustive,
        words_tested: tested,
    })
}

/// Odometer increment; false after the last word of this length.
fn advance(word: &mut [u8], k: u8) -> bool {
    for d in word.iter_mut().rev() {
        *d += 1;
        if *d < k {
            return true;
        }
        *d = 0;
    }
    false
}

/// Maps image words to the cycle their orbit ends in, memoizing every
/// word it passes through.
struct Resolver {
    k: u8,
    max_steps: usize,
    memo: HashMap<Vec<u8>, usize>,
    cycles: Vec<Vec<Vec<u8>>>,
}

impl Resolver {
    fn new(k: u8, max_steps: usize) -> Self {
        Resolver {
            k,
            max_steps,
            memo: HashMap::new(),
            cycles: Vec::new(),
        }
    }

    fn resolve(&mut self, start: &[u8]) -> Result<usize> {
        if let Some(&id) = self.memo.get(start) {
            return Ok(id);
        }
        let mut path: Vec<Vec<u8>> = vec![start.to_vec()];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::from([(start.to_vec(), 0)]);
        let mut next = Vec::new();
        let id = loop {
            if path.len() > self.max_steps {
                return Err(Error::OrbitLimitExceeded {
                    max_steps: self.max_steps,
                });
            }
            step_raw(self.k, path.last().expect("nonempty path"), &mut next);
            if let Some(&id) = self.memo.get(&next) {
                break id;
            }
            if let Some(&at) = index.get(&next) {
                self.cycles.push(path[at..].to_vec());
                break self.cycles.len() - 1;
            }
            index.insert(next.clone(), path.len());
            path.push(next.clone());
        };
        for w in path {
            self.memo.insert(w, id);
        }
        Ok(id)
    }
}

/// Whether every nonempty binary word of length at most `max_len` ends at
/// the fixed point `1001110`, apart from `111`, which is fixed itself.
pub fn verify_binary_convergence(max_len: usize) -> bool {
    let base = Base::new(2).expect("2 is a valid base");
    let big = Word::parse("1001110", base).expect("binary literal");
    let small = Word::parse("111", base).expect("binary literal");
    for len in 1..=max_len {
        let mut raw = vec![0u8; len];
        loop {
            let x = Word::from_raw_unchecked(base, raw.clone());
            let expected = if x == small { &small } else { &big };
            match orbit(&x, DEFAULT_MAX_STEPS) {
                Ok(o) if o.period == 1 && o.cycle[0] == *expected => {}
                _ => return false,
            }
            if !advance(&mut raw, 2) {
                break;
            }
        }
    }
    true
}
