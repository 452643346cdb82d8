//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("exponent must satisfy {constraint}, got p = {p}")]
    InvalidExponent { p: f64, constraint: &'static str },

    #[error("requested output degree {requested} exceeds grid resolution (max {max})")]
    DegreeExceedsGrid { requested: usize, max: usize },

    #[error("grid size {m} is not a power of two")]
    GridNotPowerOfTwo { m: usize },

    #[error("field vanishes at a grid node (r = {r:.6}, theta = {theta:.6}) where exponent {s} < 1")]
    VanishingAtNode { r: f64, theta: f64, s: f64 },

    #[error("test function must vanish at the origin, got h(0) = {value}")]
    NonzeroAtOrigin { value: String },

    #[error("kernel is identically zero")]
    ZeroKernel,

    #[error("constants ledger is missing entry {entry}")]
    MissingLedgerEntry { entry: String },

    #[error("unknown experiment `{name}`")]
    UnknownExperiment { name: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("solver did not converge: {0}")]
    NoConvergence(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
