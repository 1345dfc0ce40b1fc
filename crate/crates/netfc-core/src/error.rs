//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node count {0} exceeds the 64-vertex cap")]
    CapExceeded(usize),
    #[error("node count must be at least 1")]
    EmptyGraph,
    #[error("edge endpoint {endpoint} out of range for {nodes} nodes")]
    EndpointOutOfRange { endpoint: usize, nodes: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("invalid topology parameters: {0}")]
    InvalidTopology(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge on line {line}: {msg}")]
    MalformedEdge { line: usize, msg: String },
    #[error("source vertex {0} is not in the restriction set")]
    SourceNotInRestriction(usize),
    #[error("average path length undefined: graph is disconnected or has fewer than 2 nodes")]
    PathLengthUndefined,
    #[error("subgraph size {size} out of range 1..={max}")]
    SizeOutOfRange { size: usize, max: usize },
    #[error("scale {scale} out of range 1..={max}")]
    ScaleOutOfRange { scale: usize, max: usize },
    #[error("reach count {reach} exceeds subgraph size {size}")]
    ReachExceedsSize { reach: usize, size: usize },
    #[error("probability {0} outside [0, 1]")]
    ProbabilityRange(f64),
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("brute-force subset scan supports at most 24 vertices, got {0}")]
    BruteForceGuard(usize),
    #[error("canonical form supports at most 8 vertices, got {0}")]
    CanonicalGuard(usize),
    #[error("labeled enumeration supports 2..=7 vertices, got {0}")]
    LabeledEnumGuard(usize),
    #[error("sampling gave up after {0} consecutive disconnected draws")]
    RejectionLimit(u64),
    #[error("sampled mode requires count, edge probability, and seed")]
    MissingSampleParams,
    #[error("correlation input has fewer than {min} points or zero variance")]
    DegenerateVariance { min: usize },
    #[error("length mismatch between correlation inputs: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("predictors are collinear; multiple correlation undefined")]
    CollinearPredictors,
    #[error("csv parse error on line {line}: {msg}")]
    CsvParse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
