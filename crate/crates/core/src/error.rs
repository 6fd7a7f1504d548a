use thiserror::Error;

use crate::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("unknown node id {0}")]
    UnknownNode(NodeId),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported topology: {0}")]
    UnsupportedTopology(String),
    #[error("instance has {n} nodes, exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
