use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("primed symbol at position {position} where only 0/1 are allowed")]
    PrimedSymbol { position: usize },

    #[error("unprimed symbol at position {position} where only 0'/1' are allowed")]
    UnprimedSymbol { position: usize },

    #[error("line {line}, column {column}: unexpected character {found:?}")]
    BadChar { line: usize, column: usize, found: char },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid sequence type ({ell}, {s}): weight exceeds length")]
    InvalidType { ell: usize, s: usize },

    #[error("{what}: input length {len} exceeds the limit of {limit}")]
    TooLong { what: &'static str, len: usize, limit: usize },

    #[error("sequence {index} has type {found}, expected {expected}")]
    MixedTypes { index: usize, expected: String, found: String },

    #[error("alignment needs n >= m, got n = {n}, m = {m}")]
    TooFewSequences { n: usize, m: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph needs at least 2 vertices, got {n}")]
    GraphTooSmall { n: usize },

    #[error("self-loop on vertex {v}")]
    SelfLoop { v: usize },

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("clique has {found} vertices, expected {expected}")]
    CliqueSize { expected: usize, found: usize },

    #[error("vertices {u} and {v} of the clique are not adjacent")]
    NotAClique { u: usize, v: usize },

    #[error("clique size k must be positive")]
    ZeroK,

    #[error("the graph has no {k}-clique")]
    NoCliques { k: usize },

    #[error("growth factor must be at least 2, got {growth}")]
    GrowthTooSmall { growth: u64 },

    #[error("length schedule must satisfy 0 < ell0 <= ell1 <= ell2 <= ell3 <= ell4, got {0:?}")]
    BadSchedule([u64; 5]),

    #[error("gadget symbol total ell0 = {ell0} is odd; the m2 threshold would not be integral")]
    OddEll0 { ell0: u64 },

    #[error("infeasible scale: {what} needs {needed} symbols, limit is {limit}")]
    InfeasibleScale { what: &'static str, needed: u128, limit: u128 },

    #[error("symbol {position}: {message}")]
    Layout { position: usize, message: String },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
