use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid equation: {0}")]
    InvalidEquation(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("expected {expected} weights, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("arithmetic overflow: value exceeds the 128-bit working range")]
    Overflow,

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("search box of {size} candidates exceeds the cap of {cap}")]
    BoxTooLarge { size: u128, cap: u128 },

    #[error("unknown suite `{0}` (expected table1, table2, eq12 or all)")]
    UnknownSuite(String),

    #[error("at least one seed is required")]
    NoSeeds,

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}
