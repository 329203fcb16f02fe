//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by device construction, estimation, and serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Generated device has a non-increasing code edge; the edge search
    /// assumes locatable, ordered edges.
    #[error("device edges not strictly increasing at code {code}")]
    NonMonotoneDevice { code: u32 },

    /// First and last edge coincide; no endpoint line can be fit.
    #[error("degenerate device: first and last code edge coincide")]
    DegenerateDevice,

    /// Innovation variance collapsed to zero or below; the run cannot
    /// continue and is aborted.
    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),

    #[error("snapshot parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
