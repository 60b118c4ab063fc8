use thiserror::Error;

use crate::Rational;

/// Errors raised by the combinatorial and numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("{smaller} is not dominated by {larger}")]
    NotDominated { smaller: String, larger: String },

    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    DoesNotFit {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid rank sequence: {0}")]
    InvalidRanks(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("frame bound {0} is outside the open interval (1, 2)")]
    AlphaOutOfRange(Rational),

    #[error("invalid frame bound: {0}")]
    InvalidAlpha(String),

    #[error("frame bound {0} must be greater than 1")]
    AlphaNotGreaterThanOne(Rational),

    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),

    #[error("degenerate dual: {0}")]
    Degenerate(String),

    #[error("invalid multiplicity function: {0}")]
    InvalidMultiplicity(String),

    #[error("{ranks} is not a tight fusion frame sequence in dimension {dim}")]
    NotATffSequence { ranks: String, dim: usize },

    #[error("no convergence after {restarts} restarts (best residual {best_residual:e})")]
    ConvergenceFailure { restarts: usize, best_residual: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
