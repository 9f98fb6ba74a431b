use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad input: malformed group spec, out-of-range element, wrong backend.
    #[error("usage error: {0}")]
    Usage(String),

    /// A configured size or work cap would be exceeded.
    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    Resource {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// An algebraic identity that must hold did not. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
