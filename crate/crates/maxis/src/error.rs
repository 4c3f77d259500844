use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Errors produced by graph construction, encoding, and the analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order must be between 1 and {MAX_VERTICES}, got {0}")]
    OrderOutOfRange(usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),

    #[error("empty graph6 line")]
    Graph6Empty,

    #[error("graph6 line has wrong length: expected {expected} bytes, got {got}")]
    Graph6Length { expected: usize, got: usize },

    #[error("graph6 byte {byte} at index {index} outside printable range 63..=126")]
    Graph6Byte { byte: u8, index: usize },

    #[error("graph6 order {0} exceeds the supported maximum {MAX_VERTICES}")]
    Graph6Order(usize),

    #[error("graph is not connected")]
    NotConnected,

    #[error("supplied independence number {supplied} does not match the graph's ({actual})")]
    AlphaMismatch { supplied: usize, actual: usize },

    #[error("supplied order {supplied} does not match the graph's ({actual})")]
    OrderMismatch { supplied: usize, actual: usize },

    #[error("need 1 <= alpha <= n, got n={n}, alpha={alpha}")]
    InvalidAlpha { n: usize, alpha: usize },

    #[error("need alpha < n for this construction, got n={n}, alpha={alpha}")]
    AlphaNotBelowOrder { n: usize, alpha: usize },

    #[error("clique profile must be nonempty with every size >= 1")]
    BadProfile,

    #[error("explicit enumeration supports at most {max} vertices, got {got}")]
    TooLargeForEnumeration { got: usize, max: usize },

    #[error("internal graph generation supports 1..={max} vertices, got {got}")]
    GenerationRange { got: usize, max: usize },

    #[error("verification supports 1..={max} vertices, got {got}")]
    VerificationRange { got: usize, max: usize },

    #[error("graph on line {line} has order {got}, expected {expected}")]
    WrongOrder {
        line: usize,
        got: usize,
        expected: usize,
    },

    #[error("vertex {y} is not in the closed neighborhood of vertex {x}")]
    NotInClosedNeighborhood { x: usize, y: usize },

    #[error("vertex {0} is a cutvertex; rewiring it would disconnect the graph")]
    CutvertexRewire(usize),

    #[error("line {line}: {source}")]
    Ingest { line: usize, source: Box<Error> },

    #[error("unknown {what} '{name}'; known: {known}")]
    UnknownName {
        what: &'static str,
        name: String,
        known: String,
    },

    #[error("flag {flag} is required by {context}")]
    MissingFlag {
        flag: &'static str,
        context: &'static str,
    },

    #[error("flag {flag} is inconsistent with {context}")]
    ConflictingFlag {
        flag: &'static str,
        context: &'static str,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
