use thiserror::Error;

/// Errors raised by the algebra, Fock-space and expansion layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("unbound indeterminate `{0}`")]
    UnboundIndeterminate(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index {index} out of range for a sequence of length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("stability error: {0}")]
    Stability(String),
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("charge error: expected charge {expected}, found {found}")]
    Charge { expected: i64, found: i64 },
    #[error("tractability error: {0}")]
    Tractability(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::UnboundIndeterminate(_) => "unbound-indeterminate",
            Error::Domain(_) => "domain",
            Error::OutOfRange { .. } => "out-of-range",
            Error::Stability(_) => "stability",
            Error::Truncation(_) => "truncation",
            Error::Charge { .. } => "charge",
            Error::Tractability(_) => "tractability",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
