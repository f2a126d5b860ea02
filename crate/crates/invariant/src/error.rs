use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{crossings} crossings exceed the naive engine cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
    #[error("frontier width reached {width}, above the cap of {cap}")]
    FrontierTooWide { width: usize, cap: usize },
    #[error("crossing order is not a permutation of the {0} crossings")]
    BadOrder(usize),
    #[error("engines disagree: naive {naive} vs sweep {sweep}")]
    EngineMismatch { naive: String, sweep: String },
    #[error("malformed polynomial: {0}")]
    Parse(String),
}
