use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word contains a letter that is zero or out of range for the group.
    #[error("invalid letter {value} at position {index}")]
    InvalidLetter { index: usize, value: i32 },

    /// A commuting pair names a generator outside `1..=n`, or pairs a
    /// generator with itself.
    #[error("invalid commuting pair ({a},{b}) for a group with {n} generators")]
    InvalidCommutingPair { a: i64, b: i64, n: u32 },

    /// Columns hold beads but no letter is exposed, so the piling cannot
    /// have been produced by pushing a word.
    #[error("malformed piling: beads remain but no letter is exposed")]
    MalformedPiling,

    /// An operation that needs at least one bead was given an empty piling.
    #[error("piling is empty")]
    EmptyPiling,

    /// The pyramidal iteration exceeded its bound, which only happens when
    /// the support of the input does not induce a connected subgraph.
    #[error("piling is split: its support does not induce a connected subgraph")]
    NotNonSplit,

    /// The mandatory self-check on an assembled conjugator failed. This is
    /// never returned for well-formed inputs; it signals an internal bug.
    #[error("conjugator witness failed verification; this is a bug")]
    WitnessVerificationFailed,

    /// A free-group fast path was invoked on a group with commuting pairs.
    #[error("group is not free: commuting pairs are present")]
    NotFreeGroup,

    /// An abelian fast path was invoked on a group whose commuting list is
    /// not complete.
    #[error("group is not abelian: some generator pairs do not commute")]
    NotAbelianGroup,

    /// A search exceeded its configured state budget.
    #[error("search budget exceeded after {states} states")]
    BudgetExceeded { states: usize },

    /// A piling with zero columns cannot be drawn.
    #[error("piling has no columns")]
    EmptyGroup,

    /// Word text could not be parsed.
    #[error("cannot parse word: {0}")]
    WordSyntax(String),

    /// Piling text could not be parsed.
    #[error("cannot parse piling: {0}")]
    PilingSyntax(String),

    /// Commuting-pair text could not be parsed.
    #[error("cannot parse commuting pairs: {0}")]
    CommutingSyntax(String),
}
