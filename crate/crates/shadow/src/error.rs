use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("arrangements need at least one pseudocircle, got n = {0}")]
    TooSmall(usize),
    #[error("odd flower size {0} is experimental and disabled")]
    OddFlower(usize),
    #[error("word length {found} does not match {expected} components")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid component selection: {0}")]
    BadSelection(String),
    #[error("malformed shadow: {0}")]
    Malformed(String),
    #[error("malformed PD code: {0}")]
    BadPd(String),
    #[error("custom shadows must be supplied as JSON")]
    CustomNeedsInput,
    #[error("invalid wiring: {0}")]
    BadWiring(String),
}
