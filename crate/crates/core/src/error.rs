use thiserror::Error;

use crate::subdigraph::Cycle;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("loops not allowed: edge {{{0}, {0}}}")]
    LoopNotAllowed(usize),
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("zero weight on arc ({0}, {1})")]
    ZeroWeight(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("digraph is not a positive weighted loopless symmetric digraph")]
    NotPwls,
    #[error("matrix has a nonzero diagonal entry at {0}")]
    NonZeroDiagonal(usize),
    #[error("weighting is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("digon covers need even k, got {0}")]
    OddDigonCover(usize),
    #[error("k = {k} out of range 1..={n}")]
    CoverSizeOutOfRange { k: usize, n: usize },
    #[error("cycle length bound must be at least {min}, got {got}")]
    LengthBoundTooSmall { min: usize, got: usize },
    #[error("signing does not match the digon set of the digraph")]
    SigningMismatch,
    #[error("{count} digons exceed the signing cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("not invariant: {0}")]
    NotInvariant(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid signing spec `{0}`")]
    BadSigningSpec(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn not_invariant(even_cycle: Option<&Cycle>, asymmetric: Option<&Cycle>) -> Self {
        let mut parts = Vec::new();
        if let Some(c) = even_cycle {
            parts.push(format!("even cycle {c}"));
        }
        if let Some(c) = asymmetric {
            parts.push(format!("asymmetric cycle {c}"));
        }
        Error::NotInvariant(parts.join(", "))
    }
}
