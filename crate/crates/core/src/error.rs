use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coin angle {theta} is excluded: cos and sin must both be nonzero")]
    InvalidAngle { theta: f64 },

    #[error("state is not normalized: squared norm {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("unsupported internal dimension {0}, expected 2 or 3")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: state has dimension {state}, coin acts on dimension {coin}")]
    DimensionMismatch { state: usize, coin: usize },

    #[error("invalid index pair ({j1}, {j2}) for dimension {dim}")]
    InvalidIndex { j1: usize, j2: usize, dim: usize },

    #[error("rescaled sums need t >= 1 for r = {r}")]
    UndefinedRescaling { r: u32 },

    #[error("cannot step back from t = 0")]
    NegativeTime,

    #[error("quadrature did not reach tolerance {tolerance:e} (estimate {estimate:e})")]
    QuadratureFailure { tolerance: f64, estimate: f64 },

    #[error("{nodes} k-nodes cannot resolve t = {t} with support width {width}; need at least {required}")]
    InsufficientNodes {
        nodes: usize,
        required: usize,
        t: u64,
        width: usize,
    },

    #[error("eigensolver residual {residual:e} at k = {k}")]
    EigenResidual { k: f64, residual: f64 },

    #[error("operation requires a {expected} walk")]
    WrongWalk { expected: &'static str },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed report: {0}")]
    Report(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
