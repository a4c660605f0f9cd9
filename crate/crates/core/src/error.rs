use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("letter {letter} is outside the alphabet of rank {m}|{n}")]
    LetterOutOfRange { letter: i32, m: usize, n: usize },
    #[error("index {index} is not a Kashiwara index for rank {m}|{n}")]
    BadIndex { index: i32, m: usize, n: usize },
    #[error("{0} is not a partition")]
    NotPartition(String),
    #[error("shape {shape} is not a hook partition for rank {m}|{n}")]
    NotHook { shape: String, m: usize, n: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid semi-infinite word: {0}")]
    InvalidSemiWord(String),
    #[error("invalid semi-infinite tableau at column {column}, row {row}: {reason}")]
    InvalidSemiTableau { column: usize, row: usize, reason: String },
    #[error("window {m}|{n} is too small: {reason}")]
    WindowTooSmall { m: usize, n: usize, reason: String },
    #[error("invalid rational tableau: {0}")]
    InvalidRational(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CrystalError>;
