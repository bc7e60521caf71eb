use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dilation constraint violated on edge {edge:?}: {message}")]
    Constraint {
        edge: (usize, usize),
        message: String,
    },

    #[error("invalid witness: {0}")]
    Witness(String),

    #[error("structural mismatch: {0}")]
    Structural(String),

    #[error("infeasible request: {0}")]
    Feasibility(String),

    #[error("search budget of {nodes} nodes exhausted: {detail}")]
    Budget { nodes: u64, detail: String },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
