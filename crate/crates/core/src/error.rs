use thiserror::Error;

/// Broad failure class, used by the CLI to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Invariant,
    Precondition,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid ring presentation: {0}")]
    InvalidRing(#[from] crate::ring::RingViolation),
    #[error("elements belong to different ring presentations")]
    PresentationMismatch,
    #[error("ring has no fundamental class")]
    NoFundamentalClass,
    #[error("unknown basis symbol `{0}`")]
    UnknownSymbol(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::UnknownSymbol(_) => ErrorKind::Parse,
            Error::InvalidRing(_) | Error::Inconsistent(_) => ErrorKind::Invariant,
            Error::PresentationMismatch
            | Error::NoFundamentalClass
            | Error::DimensionMismatch { .. }
            | Error::Precondition(_) => ErrorKind::Precondition,
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
