use pclink_invariant::InvariantError;
use pclink_shadow::{Family, ShadowError};
use pclink_word::WordError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Shadow(#[from] ShadowError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("the custom family has no word census")]
    CustomFamily,
    #[error("Jones partitions of {family} are capped at n = {cap}, got {n}")]
    JonesCap { family: Family, n: usize, cap: usize },
    #[error("word enumeration is capped at n = {cap}, got {n}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("n must be between 1 and 63, got {0}")]
    BadSize(usize),
    #[error("cache {path}: {message}")]
    Cache { path: String, message: String },
    #[error("could not start worker pool: {0}")]
    Workers(String),
}
