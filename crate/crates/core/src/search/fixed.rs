use crate::description::{render_into, Description};
use crate::error::Result;
use crate::search::enumerate::{over_counts, over_subsets, Budget, Shape};
use crate::search::{fixed_point_condition_holds, sort_fixed_points, SearchConfig};
use crate::word::{Base, Word};

/// Every nonempty word `w` with `step(w) = w`, sorted by length and then
/// lexicographically.
///
/// A fixed point equals the rendering of its own description, so its block
/// counts sum to its rendered length. The search walks letter subsets and
/// count tuples meeting that identity, renders each, and keeps the ones
/// whose letter tally reproduces the blocks exactly.
///
/// Fails only when the default work budget runs out, which happens for
/// large bases where the letter subsets alone outnumber it.
pub fn enumerate_fixed_points(base: Base) -> Result<Vec<Word>> {
    enumerate_fixed_points_with(base, &SearchConfig::default())
}

pub fn enumerate_fixed_points_with(base: Base, config: &SearchConfig) -> Result<Vec<Word>> {
    let limit = config.effective_limit(base);
    let budget = Budget::new(config.budget);
    let mut found = over_subsets(base, config.parallel, &budget, |letters| {
        let mut hits = Vec::new();
        let mut buf = Vec::new();
        over_counts(
            base,
            letters,
            Shape::SelfConsistent { limit },
            &budget,
            &mut |blocks| {
                buf.clear();
                render_into(base, blocks, &mut buf);
                let mut counts = [0u64; 36];
                for &l in &buf {
                    counts[l as usize] += 1;
                }
                let exact = blocks.iter().map(|b| b.count).sum::<u64>() == buf.len() as u64
                    && blocks
                        .iter()
                        .all(|b| counts[b.letter.value() as usize] == b.count);
                if exact {
                    let d = Description::new_unchecked(base, blocks.to_vec());
                    // implied by the length identity; kept as a cross-check
                    if fixed_point_condition_holds(&d) {
                        hits.push(Word::from_raw_unchecked(base, buf.clone()));
                    }
                }
                Ok(())
            },
        )?;
        Ok(hits)
    })?;
    sort_fixed_points(&mut found);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn names(ws: &[Word]) -> Vec<String> {
        ws.iter().map(Word::to_string).collect()
    }

    #[test]
    fn base2() {
        let b = Base::new(2).unwrap();
        assert_eq!(
            names(&enumerate_fixed_points(b).unwrap()),
            ["111", "1001110"]
        );
    }

    #[test]
    fn base3() {
        let b = Base::new(3).unwrap();
        assert_eq!(
            names(&enumerate_fixed_points(b).unwrap()),
            ["22", "11110", "12111", "101100", "1022120", "2211110", "22101100"]
        );
    }

    #[test]
    fn every_result_is_fixed() {
        for k in 2..=10 {
            let b = Base::new(k).unwrap();
            for w in enumerate_fixed_points(b).unwrap() {
                assert!(w.is_fixed_point(), "{w} in base {k}");
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for k in 2..=8 {
            let b = Base::new(k).unwrap();
            let seq = SearchConfig {
                parallel: false,
                ..SearchConfig::default()
            };
            assert_eq!(
                enumerate_fixed_points_with(b, &seq).unwrap(),
                enumerate_fixed_points(b).unwrap()
            );
        }
    }

    #[test]
    fn small_limit_truncates() {
        let b = Base::new(2).unwrap();
        let cfg = SearchConfig {
            length_limit: Some(3),
            ..SearchConfig::default()
        };
        assert_eq!(
            names(&enumerate_fixed_points_with(b, &cfg).unwrap()),
            ["111"]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let b = Base::new(6).unwrap();
        let cfg = SearchConfig {
            budget: 100,
            ..SearchConfig::default()
        };
        assert!(matches!(
            enumerate_fixed_points_with(b, &cfg),
            Err(Error::BudgetExceeded { budget: 100, .. })
        ));
    }
}
