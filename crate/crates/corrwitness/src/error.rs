use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian: max deviation {deviation:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e}")]
    NotPositiveSemidefinite { eigenvalue: f64 },

    #[error("trace must equal one: deviation {deviation:.3e}")]
    NonUnitTrace { deviation: f64 },

    #[error("state vector is not normalized: deviation {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error("matrix is not unitary: max deviation {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("{what} = {value} outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("eigensolver did not converge at dimension {dim} after {sweeps} sweeps")]
    EigenNonConvergence { dim: usize, sweeps: usize },

    #[error("Fock cutoff n_max = {n_max} insufficient: {detail}")]
    CutoffInsufficient { n_max: usize, detail: String },

    #[error("truncation not converged: reduced state moved {change:.3e} when doubling n_max = {n_max}")]
    TruncationNotConverged { n_max: usize, change: f64 },

    #[error("bath size {n} outside supported range [{min}, {max}]")]
    BathSize { n: usize, min: usize, max: usize },

    #[error("a seeded random stream is required to draw Haar-random unitaries")]
    RngRequired,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
