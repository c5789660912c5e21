use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{side} node {id} out of range (size {size})")]
    NodeOutOfRange { side: &'static str, id: usize, size: usize },

    #[error("partition covers {got} nodes, graph has {expected}")]
    PartitionSize { expected: usize, got: usize },

    #[error("community label {label} out of range ({count} communities)")]
    LabelOutOfRange { label: usize, count: usize },

    #[error("objective undefined on a graph with zero total weight")]
    EmptyGraph,

    #[error("projected modularity needs bipartite degrees attached to the graph")]
    MissingSidecar,

    #[error("objective {0} cannot be optimised on this graph")]
    ObjectiveMismatch(&'static str),

    #[error("node {0} is not alone in its community")]
    NotIsolated(usize),

    #[error("node {node} is not a member of community {community}")]
    NotMember { node: usize, community: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("label sequences differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("no results to choose from")]
    NoResults,

    #[error("degree sequence balancing exhausted a node set")]
    GenerationFailure,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
