use thiserror::Error;

/// Errors raised while reading one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("expected {expected} records, found {found}")]
    CountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("threshold assignment has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("brute-force cap exceeded: n = {n} > cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph is not bipartite: odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error("graph is not a forest")]
    NotForest,
    #[error("edge set is not a matching: vertex {vertex} is covered twice")]
    NotAMatching { vertex: usize },
    #[error("{u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex set is not resistant under the given thresholds (vertex {vertex} fails)")]
    NotResistant { vertex: usize },
    #[error("induced subgraph contains the triangle {0:?}")]
    ContainsTriangle([usize; 3]),
    #[error("assignment totals differ: {left} vs {right}")]
    UnequalTotals { left: u64, right: u64 },
    #[error("target {r} lies outside [{lo}, {hi}]")]
    TargetOutOfRange { r: usize, lo: usize, hi: usize },
    #[error("flow network is malformed: {0}")]
    MalformedNetwork(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate reduction instance: s = {s}, p = {p}")]
    DegenerateInstance { s: i64, p: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
