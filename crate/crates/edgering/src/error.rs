use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Structural(String),

    #[error("cycle count exceeds cap {cap}; raise --cycle-cap")]
    CycleCap { cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("zero-sum condition fails at vertex {0}")]
    VertexSum(usize),

    #[error("not in the coordinate subring: artificial coordinate {0} is nonzero")]
    NotInSubring(usize),

    #[error("inconsistent weights on the artificial pair of directed edge ({0},{1})")]
    InconsistentPair(usize, usize),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
