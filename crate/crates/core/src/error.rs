use std::path::PathBuf;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("induced subgraph needs a nonempty vertex set")]
    EmptyKeep,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has {n} vertices, exceeding the exact-search budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },

    #[error("attack pair must consist of two distinct vertices, got ({0}, {0})")]
    SameAttackers(Vertex),

    #[error("{0}")]
    InvalidParameter(String),

    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),

    /// The patch rules of the gadget branch left part of the graph undominated.
    #[error("patched set {set} does not dominate the input graph (2-SDS of gadget was {gadget_set})")]
    PatchInsufficient {
        graph: Graph,
        set: VertexSet,
        gadget_set: VertexSet,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
