use thiserror::Error;

/// Errors produced by the word, dynamics and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base {0} is out of range (expected 2..=36)")]
    InvalidBase(u32),

    #[error("letter {letter} is not valid in base {base}")]
    InvalidLetter { letter: u32, base: u8 },

    #[error("invalid character {ch:?} at position {position} for base {base}")]
    InvalidCharacter { ch: char, position: usize, base: u8 },

    #[error("word is empty")]
    EmptyWord,

    #[error("numeral value must be positive")]
    NonPositive,

    #[error("numeral must not be empty")]
    EmptyNumeral,

    #[error("numeral has a leading zero")]
    LeadingZero,

    #[error("numeral does not fit in 64 bits")]
    NumeralOverflow,

    #[error("description must have at least one block")]
    EmptyDescription,

    #[error("block letters must be strictly descending")]
    UnorderedBlocks,

    #[error("block count must be positive")]
    ZeroCount,

    #[error("words of a cycle must share one base")]
    MixedBases,

    #[error("words do not form a cycle under the step map")]
    NotACycle,

    #[error("no repeated word within {max_steps} steps")]
    OrbitLimitExceeded { max_steps: usize },

    #[error("search needs at least {needed} units of work, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
