#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] quadsum_core::Error),
    #[error("invalid range: lo {lo} > hi {hi}")]
    EmptyRange { lo: i64, hi: i64 },
    #[error("worker {0} panicked")]
    WorkerPanic(usize),
    #[error("malformed A-number {0:?}")]
    MalformedANumber(String),
    #[error("{a_number}: line {line}: {msg}")]
    Parse {
        a_number: String,
        line: usize,
        msg: String,
    },
    #[error("{a_number}: b-file unavailable: {reason}")]
    Unavailable { a_number: String, reason: String },
    #[error("no index in common between the computed values and the b-file")]
    NoOverlap,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
