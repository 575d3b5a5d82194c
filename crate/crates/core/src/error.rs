use thiserror::Error;

/// Errors raised by semigroup operations, constructions and loaders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuError {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("chain is not ascending at position {0}")]
    NotAscending(usize),
    #[error("unsupported chain: {0}")]
    UnsupportedChain(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("character data inconsistent: {0}")]
    CharacterInconsistent(String),
    #[error("pullback constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CuError {
    pub fn mismatch(what: impl Into<String>) -> Self {
        CuError::DomainMismatch(what.into())
    }

    pub fn parse(what: impl Into<String>) -> Self {
        CuError::Parse(what.into())
    }

    /// Parse failures are reported separately from domain failures by the CLI.
    pub fn is_parse(&self) -> bool {
        matches!(self, CuError::Parse(_) | CuError::Io(_))
    }
}

pub type Result<T, E = CuError> = std::result::Result<T, E>;
