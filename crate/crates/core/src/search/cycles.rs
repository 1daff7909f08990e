use std::collections::BTreeSet;

use crate::description::Description;
use crate::dynamics::orbit;
use crate::error::Result;
use crate::search::enumerate::{over_counts, over_subsets, Budget, Shape};
use crate::search::{CycleRecord, SearchConfig};
use crate::word::Base;

/// Every cycle of period at least 2 reached from an image word whose
/// preimage and rendering both fit in `length_limit` letters.
///
/// Each cycle word is the image of its predecessor, so any cycle whose
/// words are all at most `length_limit` long is reached from one of these
/// seeds. Sorted by period, then by first word.
pub fn enumerate_cycles(base: Base, length_limit: usize) -> Result<Vec<CycleRecord>> {
    let config = SearchConfig {
        length_limit: Some(length_limit),
        ..SearchConfig::default()
    };
    enumerate_cycles_with(base, &config)
}

pub fn enumerate_cycles_with(base: Base, config: &SearchConfig) -> Result<Vec<CycleRecord>> {
    Ok(search(base, config)?.0)
}

/// Cycles plus the number of seeds examined.
pub(crate) fn search(base: Base, config: &SearchConfig) -> Result<(Vec<CycleRecord>, u64)> {
    let limit = config.effective_limit(base);
    let budget = Budget::new(config.budget);
    let found = over_subsets(base, config.parallel, &budget, |letters| {
        let mut local = BTreeSet::new();
        let mut seeds = 0u64;
        over_counts(
            base,
            letters,
            Shape::ImageWithin { limit },
            &budget,
            &mut |blocks| {
                seeds += 1;
                let seed = Description::new_unchecked(base, blocks.to_vec()).render();
                let o = orbit(&seed, config.max_steps)?;
                if o.period >= 2 {
                    local.insert(CycleRecord::canonical(o.cycle));
                }
                Ok(())
            },
        )?;
        Ok(vec![(local, seeds)])
    })?;
    let mut seeds = 0;
    let mut all = BTreeSet::new();
    for (set, n) in found {
        seeds += n;
        all.extend(set);
    }
    Ok((all.into_iter().collect(), seeds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::length_cap;
    use crate::error::Error;

    #[test]
    fn none_in_base2() {
        let b = Base::new(2).unwrap();
        assert!(enumerate_cycles(b, 8).unwrap().is_empty());
        assert!(enumerate_cycles(b, 3).unwrap().is_empty());
    }

    #[test]
    fn some_in_base3() {
        let b = Base::new(3).unwrap();
        let cs = enumerate_cycles(b, length_cap(b)).unwrap();
        assert!(!cs.is_empty());
        for c in &cs {
            assert!(c.period() >= 2);
            assert_eq!(CycleRecord::new(c.words().to_vec()).unwrap(), *c);
        }
        assert!(cs.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for k in 2..=5 {
            let b = Base::new(k).unwrap();
            let seq = SearchConfig {
                parallel: false,
                ..SearchConfig::default()
            };
            assert_eq!(
                enumerate_cycles_with(b, &seq).unwrap(),
                enumerate_cycles(b, length_cap(b)).unwrap()
            );
        }
    }

    #[test]
    fn orbit_budget_propagates() {
        let b = Base::new(3).unwrap();
        let cfg = SearchConfig {
            max_steps: 1,
            ..SearchConfig::default()
        };
        assert!(matches!(
            enumerate_cycles_with(b, &cfg),
            Err(Error::OrbitLimitExceeded { max_steps: 1 })
        ));
    }
}
