use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: undefined node `{name}`")]
    UndefinedName { line: usize, name: String },

    #[error("line {line}: node `{name}` is defined twice")]
    DuplicateNode { line: usize, name: String },

    #[error("rule of `{node}` reads {arity} variables, above the cap of {cap}")]
    ArityCap {
        node: String,
        arity: usize,
        cap: usize,
    },

    #[error("target refers to {found} nodes but the network has {expected}")]
    TargetLength { expected: usize, found: usize },

    #[error("invalid target: {0}")]
    InvalidTarget(String),

    /// 1-based node numbers that take both values inside the target set.
    #[error("target set is not rectangular: nodes {} take both values", join_one_based(.0))]
    AmbiguousTarget(Vec<usize>),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("variable {} is still functional and cannot be factored out", .0 + 1)]
    StillFunctional(usize),

    #[error("graph contains a directed cycle")]
    Cyclic,

    #[error("fixed-state subnetwork is not closed: node {} reads node {}", .node + 1, .input + 1)]
    NotClosed { node: usize, input: usize },

    #[error("stabilizing-time bound must be at least 1, got {0}")]
    InfeasibleTau(usize),

    #[error("{what} has {size} nodes, above the exhaustive cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

fn join_one_based(nodes: &[usize]) -> String {
    nodes
        .iter()
        .map(|k| (k + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}
