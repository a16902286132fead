use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("empty point list")]
    EmptyInput,

    #[error("points do not span an affine space of dimension {expected} (rank {found})")]
    RankDeficient { expected: usize, found: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("z is not in general position with respect to S (witness {witness:?}); use the oracle path")]
    NotGeneralPosition { witness: Vec<usize> },

    #[error("subset scan over {n} points exceeds the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate failed re-verification: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("rejection budget of {attempts} attempts exhausted (seed {seed})")]
    GenerationBudget { seed: u64, attempts: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
