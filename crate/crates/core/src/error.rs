use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("atom index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: usize },
    #[error("operands belong to different Garside structures")]
    StructureMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("refusing to enumerate {0} simple elements")]
    TooLarge(u128),
    #[error("tuple is not in the given interval")]
    NotInInterval,
    #[error("sliding target must shrink each bound by 0 or 1")]
    BadTarget,
    #[error("coordinate {0} has canonical length 0 but its supremum must decrease")]
    ZeroLengthFactor(usize),
    #[error("no simple element keeps the tuple in the interval")]
    NoneExists,
    #[error("conjugacy oracle returned no conjugator")]
    OracleFailed,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
