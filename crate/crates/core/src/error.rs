use thiserror::Error;

use crate::graph::{Edge, VertexId};
use crate::SparingResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: VertexId, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex set is not independent: edge {0} has both endpoints in it")]
    NotIndependent(Edge),

    #[error("cannot pick vertex {vertex}: {reason}")]
    InvalidPick { vertex: VertexId, reason: PickError },

    #[error("replay pick #{index} (vertex {vertex}) rejected: {reason}")]
    Replay {
        index: usize,
        vertex: VertexId,
        reason: PickError,
    },

    #[error("pick list is incomplete: vertices {unlabeled:?} were never labeled")]
    IncompleteReplay { unlabeled: Vec<VertexId> },

    #[error("graph has {n} vertices, above the limit of {limit} for this method")]
    TooLarge { n: usize, limit: usize },

    #[error("ground set of size {size} cannot supply an injective labeling for {n} vertices")]
    InfeasibleGroundSet { size: usize, n: usize },

    #[error("time budget exceeded; best known upper bound is phi <= {}", best.phi)]
    BudgetExceeded { best: Box<SparingResult> },
}

/// Why a greedy pick was refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PickError {
    #[error("vertex is out of range")]
    OutOfRange,
    #[error("vertex was already chosen")]
    AlreadyChosen,
    #[error("vertex already carries a singleton label")]
    AlreadyLabeled,
    #[error("vertex is adjacent to chosen vertex {0}")]
    AdjacentToChosen(VertexId),
}
