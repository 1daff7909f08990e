//! Counting inequalities every fixed point and cycle must satisfy.
//!
//! For a block whose count has `n + 1` digits, the count is at least `k^n`.
//! Summing over the blocks of a self-describing word gives
//! `sum(n_j) >= sum(k^n_j) - 2r`. Around a cycle the same holds summed over
//! all words. Both are necessary, not sufficient.

use crate::description::Description;
use crate::search::CycleRecord;

/// `(sum n_j + 2r, sum k^n_j)` for one description, saturating.
fn sides(d: &Description) -> (u128, u128) {
    let base = d.base();
    let k = u128::from(base.get());
    d.blocks().iter().fold((0u128, 0u128), |(lhs, rhs), b| {
        let n = b.order(base) as u32;
        (
            lhs + u128::from(n) + 2,
            rhs.saturating_add(k.saturating_pow(n)),
        )
    })
}

/// `sum n_j >= sum k^n_j - 2r` over the blocks of `d`.
pub fn fixed_point_condition_holds(d: &Description) -> bool {
    let (lhs, rhs) = sides(d);
    lhs >= rhs
}

/// The summed inequality over a sequence of descriptions, one per cycle
/// word, with each word contributing its own block count.
pub fn cycle_condition_holds_for(descriptions: &[Description]) -> bool {
    let (lhs, rhs) = descriptions
        .iter()
        .map(sides)
        .fold((0u128, 0u128), |acc, s| {
            (acc.0 + s.0, acc.1.saturating_add(s.1))
        });
    lhs >= rhs
}

/// [`cycle_condition_holds_for`] on the descriptions of the cycle's words.
pub fn cycle_condition_holds(c: &CycleRecord) -> bool {
    let ds: Vec<Description> = c
        .words()
        .iter()
        .map(|w| w.describe().expect("cycle words are nonempty"))
        .collect();
    cycle_condition_holds_for(&ds)
}
