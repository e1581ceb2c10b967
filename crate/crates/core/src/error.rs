use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inadmissible type {label}: {rule}")]
    Inadmissible { label: String, rule: &'static str },

    #[error("cannot parse type label {0:?}")]
    Parse(String),

    #[error("not of finite type / corrupted input: {0}")]
    NotFiniteType(String),

    #[error("root system is reducible; {0} needs an irreducible system")]
    Reducible(&'static str),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("group order exceeds cap {cap} (expected order {expected})")]
    CapExceeded { cap: usize, expected: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("lemma part {part} requires n >= {min}, got n = {n}")]
    LemmaRange { part: u8, min: u64, n: u64 },

    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("subsystem mismatch at node {node}: {filtered} roots by lattice filter, {regenerated} by regeneration")]
    SubsystemMismatch {
        node: usize,
        filtered: usize,
        regenerated: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
