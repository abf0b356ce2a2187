use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one of the CLI exit
/// classes through [`Error::kind`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    Parse(String),

    #[error("letter {letter} out of range 1..={degree}")]
    OutOfRange { letter: usize, degree: usize },

    #[error("letter {0} repeated in cycle notation")]
    Repeated(usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: u128 },

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("not a member of the group: {0}")]
    NotMember(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog key: {0}")]
    UnknownKey(String),

    #[error("bad input: {0}")]
    Input(String),
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Cap,
    BadInput,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CapExceeded { .. } => ErrorKind::Cap,
            Error::InvalidCover(_) | Error::NotMember(_) | Error::Precondition(_) => {
                ErrorKind::Validation
            }
            Error::Parse(_)
            | Error::OutOfRange { .. }
            | Error::Repeated(_)
            | Error::DegreeMismatch(..)
            | Error::UnknownKey(_)
            | Error::Input(_) => ErrorKind::BadInput,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Input(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
