//! Exact, approximate and certificate-based tools for 2-secure domination
//! in simple undirected graphs.

pub mod cli;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod report;
pub mod secure;

mod search;

pub use domination::DominationKind;
pub use error::{Error, Result};
pub use gadgets::GadgetResult;
pub use graph::{Graph, Ordering, Vertex, VertexSet};
pub use report::{Problem, SolveReport};
pub use secure::{DefenseCertificate, Rejection};
