use thiserror::Error;

/// Errors raised by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("too close to the pole at {0}")]
    NearPole(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error{}: {msg}", at_line(*.line))]
    /// `line` is 1-based; 0 when the input is not a file.
    Parse { line: usize, msg: String },
    #[error("values not strictly ascending at line {line}")]
    Order { line: usize },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("divergence: {0}")]
    Divergence(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("continuation failed: {0}")]
    Continuation(String),
    #[error("truncation certificate not reached: {0}")]
    Truncation(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Pole(_) => "pole",
            Error::NearPole(_) => "near-pole",
            Error::Shape(_) => "shape",
            Error::Parse { .. } => "parse",
            Error::Order { .. } => "order",
            Error::Capacity(_) => "capacity",
            Error::Divergence(_) => "divergence",
            Error::Unsupported(_) => "unsupported",
            Error::Continuation(_) => "continuation",
            Error::Truncation(_) => "truncation",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

fn at_line(line: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!(" at line {line}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
