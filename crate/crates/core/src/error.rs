use std::io;

/// Everything that can go wrong inside the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("{0:?} is not a cutset")]
    NotACutset(Vec<usize>),
    #[error("graph has no edges; the v-number of the zero ideal is undefined")]
    EdgelessGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("{0:?} is not a minimal completion set")]
    NotMinimalCompletionSet(Vec<usize>),
    #[error("certificate construction failed: {0}")]
    Certificate(String),
    #[error("{what}: size {got} exceeds cap {cap} (skipped)")]
    CapExceeded { what: &'static str, got: usize, cap: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("ideal is not a proper square-free monomial ideal")]
    NotSquarefree,
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
