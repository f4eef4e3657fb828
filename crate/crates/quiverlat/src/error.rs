//! Error type shared across the pipeline.
//!
//! Every variant knows which pipeline stage produced it, so front ends can
//! tag diagnostics uniformly without matching on variants themselves.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    SeedParse { line: usize, msg: String },

    #[error("adjacency matrix not symmetric: entries ({i},{j}) and ({j},{i}) differ")]
    SeedSymmetry { i: usize, j: usize },

    #[error("{grading} has length {got}, expected {expected} to match the matrix")]
    SeedGradingLength {
        grading: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("unsupported parameter for {family}: {msg}")]
    FamilyParam { family: String, msg: String },

    #[error("tower step {step} wants to unlink node {target}, but the quiver only has nodes 0..{size}")]
    TowerTarget {
        step: usize,
        target: usize,
        size: usize,
    },

    #[error("framing {framing} is outside the tabulated range {lo}..={hi} for {family}; pass --allow-untabulated to compute it anyway")]
    UntabulatedFraming {
        family: String,
        framing: i64,
        lo: i64,
        hi: i64,
    },

    #[error("negative a-exponent {a_exp} contributes at x-order {order}; the a -> 0 limit does not exist")]
    NegativeAPower { a_exp: i64, order: usize },

    #[error("coefficient at x-order {order} has a pole at q = 1")]
    PoleAtQOne { order: usize },

    #[error("coefficient at x-order {order} did not evaluate to an integer at q = 1")]
    NonIntegerLimit { order: usize },

    #[error("path enumeration exceeded the cap of {cap} paths")]
    EnumerationCap { cap: usize },

    #[error("R_({m},{n})({k}) did not evaluate to an integer")]
    RaneyDivision { m: i64, n: i64, k: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Pipeline stage the error belongs to, used as a diagnostic tag.
    pub fn stage(&self) -> &'static str {
        match self {
            Error::SeedParse { .. }
            | Error::SeedSymmetry { .. }
            | Error::SeedGradingLength { .. } => "seed",
            Error::FamilyParam { .. }
            | Error::TowerTarget { .. }
            | Error::UntabulatedFraming { .. } => "tower",
            Error::NegativeAPower { .. }
            | Error::PoleAtQOne { .. }
            | Error::NonIntegerLimit { .. } => "series",
            Error::EnumerationCap { .. } | Error::RaneyDivision { .. } => "lattice",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
