use thiserror::Error;

/// Errors produced by model construction, estimation and inference.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("response value {value} at row {index} is outside (0,1)")]
    ResponseOutOfRange { index: usize, value: f64 },

    #[error("design matrix is rank deficient (rank {rank} < {cols} columns)")]
    RankDeficient { rank: usize, cols: usize },

    #[error("non-finite linear predictor at observation {index}")]
    NonFinitePredictor { index: usize },

    #[error(
        "divergent integral: alpha = {alpha} is too large for mu*phi = {mu_phi:.6}, \
         (1-mu)*phi = {cmu_phi:.6}"
    )]
    DivergentIntegral { alpha: f64, mu_phi: f64, cmu_phi: f64 },

    #[error("alpha = {0} infeasible at the initial point")]
    InfeasibleAlpha(f64),

    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    #[error("optimizer failed to converge after {iterations} iterations (|grad| = {gradient_norm:.3e})")]
    NonConvergence { iterations: usize, gradient_norm: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown link function: {0}")]
    UnknownLink(String),

    #[error("all candidate fits failed: {0}")]
    AllFitsFailed(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
