//! Base-k counting dynamics on words.
//!
//! The step map replaces a word over `{0, .., k-1}` by the list, in
//! descending letter order, of each present letter's count written in base
//! `k` followed by the letter. Every orbit ends in a fixed point or a
//! cycle. This crate iterates orbits, bounds their eventual length, and
//! enumerates all fixed points and cycles of a base.
//!
//! ```
//! use peadyn::{Base, Word};
//!
//! let base = Base::new(10).unwrap();
//! let x = Word::parse("123", base).unwrap();
//! assert_eq!(x.step().to_string(), "131211");
//! ```

pub mod cli;
pub mod description;
pub mod dynamics;
pub mod error;
pub mod numeral;
pub mod search;
pub mod word;

pub use description::{Block, Description};
pub use dynamics::{eventual_length_ok, length_bound, orbit, BoundInfo, OrbitResult};
pub use error::{Error, Result};
pub use numeral::Numeral;
pub use search::{
    brute_force_classify, enumerate_cycles, enumerate_fixed_points, ClassificationReport,
    CycleRecord, SearchConfig,
};
pub use word::{Base, Letter, LetterCounts, Word};
