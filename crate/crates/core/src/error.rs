use thiserror::Error;

use crate::partitions::{Node, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("node {node} is not in the diagram of {partition}")]
    InvalidNode { partition: Partition, node: Node },

    #[error("size mismatch: {left} is a partition of {left_n}, {right} is a partition of {right_n}")]
    SizeMismatch {
        left: Partition,
        left_n: usize,
        right: Partition,
        right_n: usize,
    },

    #[error("invalid class specification: {0}")]
    InvalidClass(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutations act on different sets: {0} vs {1} letters")]
    Arity(usize, usize),

    #[error("{what} requested for n = {n}, above the cap of {cap}")]
    Capacity { what: &'static str, n: usize, cap: usize },

    #[error("solver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    Solver { sweeps: usize, off_norm: f64 },

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
