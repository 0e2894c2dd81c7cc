use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (graph6 strings, certificate JSON).
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    /// Malformed line in a multi-graph stream.
    #[error("parse error at line {line}: {msg}")]
    ParseLine { line: usize, msg: String },
    /// Input exceeds a documented size cap for the chosen algorithm.
    #[error("size limit exceeded: {0}")]
    Size(String),
    /// Structurally invalid argument (bad vertex, non-partition, wrong host…).
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
