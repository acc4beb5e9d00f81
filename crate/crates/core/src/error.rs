use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration too large: n = {n} exceeds the cap of {cap}")]
    EnumerationTooLarge { n: usize, cap: usize },

    #[error("invalid enumeration cap {0} (must be at most {max})", max = crate::tree::EnumCap::HARD_MAX)]
    InvalidCap(usize),

    #[error("malformed tree code: {0}")]
    MalformedTreeCode(String),

    #[error("r out of range: r = {r} but n + 1 = {}", n + 1)]
    ROutOfRange { n: usize, r: usize },

    #[error("n must be at least {min}, got {n}")]
    NTooSmall { n: usize, min: usize },

    #[error("A_0 not produced; the sequence offset differs from the operand count")]
    A000975Zero,

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("not a binary digit: {0:?}")]
    NotBinary(char),

    #[error("not admissible: {0}")]
    NotAdmissible(String),

    #[error("invalid linear operation: {0}")]
    InvalidOp(String),

    #[error("b-file parse error at line {line}: {message}")]
    BFileParse { line: usize, message: String },

    #[error("unknown table format {0:?} (expected md, csv or json)")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
