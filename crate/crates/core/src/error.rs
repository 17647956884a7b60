use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("not a perfect matching: {0}")]
    NotPerfect(String),
    #[error("edge {0} of the candidate set is not in the matching")]
    NotSubset(Edge),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph hash mismatch: file refers to {found}, graph is {expected}")]
    HashMismatch { expected: String, found: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid 2-switch: {0}")]
    InvalidSwitch(String),
    #[error("inconclusive: search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("graph carries no grid coordinates")]
    MissingCoords,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
