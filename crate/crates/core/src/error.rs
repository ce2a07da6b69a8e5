use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("ambient rings differ ({left} vs {right} variables)")]
    AmbientMismatch { left: usize, right: usize },

    #[error("operation undefined on the {0} ideal")]
    DegenerateIdeal(&'static str),

    #[error("operation undefined on the {0} complex")]
    DegenerateComplex(&'static str),

    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
