use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("series diverges: {0}")]
    Divergence(String),

    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("numerical degeneracy: {0}")]
    Degenerate(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag for the error category.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Resource(_) => "resource",
            Error::Divergence(_) => "divergence",
            Error::SingularPoint(_) => "singular_point",
            Error::Degenerate(_) => "degenerate",
            Error::Consistency(_) => "consistency",
            Error::Io(_) => "io",
        }
    }

    /// True for failures of internal numerical certification (rounding
    /// residues, orthogonality, eigenspace splitting).
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_) | Error::Degenerate(_))
    }
}

pub(crate) fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
