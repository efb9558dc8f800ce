use thiserror::Error;

/// Errors raised by the algebraic operations of the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{name}` expects {expected} arguments, found {found}")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("variable x{0} has no binding")]
    UnboundVariable(u32),
    #[error("invalid table for `{name}`: {reason}")]
    InvalidTable { name: String, reason: String },
    #[error("element {0} is outside the universe")]
    ElementOutOfRange(usize),
    #[error("partition is not a congruence of the algebra")]
    NotACongruence,
    #[error("subset is not closed under the operations")]
    NotClosed,
    #[error("designated set is not a deductive filter of the logic")]
    NotAFilter,
    #[error("universe of size {size} exceeds the configured cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
