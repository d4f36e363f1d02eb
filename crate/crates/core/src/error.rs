use thiserror::Error;

/// Errors raised while building, parsing or analysing finite semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("entry {value} at row {row}, column {column} is outside [0, {n})")]
    OutOfRange {
        row: usize,
        column: usize,
        value: usize,
        n: usize,
    },

    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("a semigroup needs at least one element")]
    Empty,

    #[error("element {element} is outside a carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),

    #[error("element {element} has {} inverse(s) {witnesses:?}; an inverse semigroup needs exactly one", witnesses.len())]
    NotInverse { element: usize, witnesses: Vec<usize> },

    #[error("not a group: {0}")]
    NotGroup(String),

    #[error("not a Clifford inverse semigroup: {0}")]
    NotClifford(String),

    #[error("group is not abelian: {a}*{b} != {b}*{a}")]
    NotAbelian { a: usize, b: usize },

    #[error("{what} needs {size} elements, above the cap of {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },

    #[error("subsets live over different carriers ({left} vs {right} elements)")]
    GroundMismatch { left: usize, right: usize },

    #[error("subsets must be non-empty")]
    EmptySubset,

    #[error("subset is not closed: {a}*{b} leaves it")]
    NotClosed { a: usize, b: usize },

    #[error("not an ideal: product of {a} and {b} leaves it")]
    NotIdeal { a: usize, b: usize },

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
