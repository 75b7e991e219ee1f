use thiserror::Error;

/// Errors raised while building or querying Coxeter graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("conflicting labels for pair {{{u}, {v}}}: {first} vs {second}")]
    ConflictingLabel {
        u: String,
        v: String,
        first: String,
        second: String,
    },
    #[error("invalid label {0}: finite labels must be at least 2")]
    BadLabel(u32),
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("invalid parameter in `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chain has odd boundary coefficient at vertex index {0}")]
    OddBoundary(usize),
    #[error("vector is not a mod-2 cycle (odd degree at vertex index {0})")]
    NotACycle(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alternating word needs two distinct generators")]
    SameVertex,
    #[error("alternating word length must be positive")]
    NonPositiveLength,
    #[error("no relator exists for an infinite label")]
    InfiniteLabel,
    #[error("relator generators must satisfy s < t in vertex order (got {0} >= {1})")]
    OrderViolation(usize, usize),
    #[error("relator label must be at least 2 (got {0})")]
    BadLabel(u32),
}

/// Errors from the text format and catalog parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad label `{token}` (expected an integer >= 2 or `inf`)")]
    BadLabel { line: usize, token: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid random graph spec: {0}")]
    InvalidSpec(String),
}
