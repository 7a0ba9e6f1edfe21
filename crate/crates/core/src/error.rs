use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{id}: n = {n} is outside the applicability set")]
    NotApplicable { id: String, n: i64 },
    #[error("unknown statement id {0:?}")]
    UnknownStatement(String),
    #[error("no counting convention registered for {0:?}")]
    UnknownConvention(String),
    #[error("no closed form registered for ternary form ({0}, {1}, {2})")]
    UnregisteredForm(i64, i64, i64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    Contradiction(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
