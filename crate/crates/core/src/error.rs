use thiserror::Error;

/// Errors produced by the exact-arithmetic and curve routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular change of coordinates: ad - bc = 0")]
    SingularMatrix,

    #[error("no rational Weierstrass point found")]
    NoRationalWeierstrassPoint,

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("family `{0}` instantiated to a non-integral equation")]
    NonIntegral(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
