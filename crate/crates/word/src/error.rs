use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("a word must have at least one letter")]
    Empty,
    #[error("malformed word: character {found:?} at offset {offset} is not 0 or 1")]
    BadLetter { found: char, offset: usize },
    #[error("degree mismatch: permutation acts on {expected} positions, word has length {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("permutation has size {found} but the decomposition has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("invalid run decomposition: {0}")]
    BadDecomposition(&'static str),
    #[error("length {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("length {0} does not fit in a 64-bit mask")]
    TooLong(usize),
}
