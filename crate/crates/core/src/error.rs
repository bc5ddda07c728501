use std::fmt;

/// Crate-wide error type.
///
/// The three variants map onto the three ways an operation can refuse to run:
/// a caller passed an argument outside the documented domain, a resource
/// guard tripped, or an input string failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated an operation's precondition.
    Domain(String),
    /// A resource guard (enumeration size, materialization size, subset
    /// count) would be exceeded.
    Guard(String),
    /// A serialized graph, coloring, or index string is malformed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Guard(msg) => write!(f, "guard exceeded: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
