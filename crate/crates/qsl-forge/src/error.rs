//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("not Hermitian: max |H - H^dag| = {residual:.3e} exceeds {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("not unitary: max |U^dag U - I| = {residual:.3e} exceeds {tol:.3e}")]
    NotUnitary { residual: f64, tol: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("numerical inconsistency: {0}")]
    Numerical(String),

    #[error("energy variance is degenerate (below {floor:.1e}); caller must branch first")]
    DegenerateVariance { floor: f64 },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("overlap with target is zero; global phase is undefined")]
    UndefinedPhase,

    #[error("unknown gate {name:?}; available: {available}")]
    UnknownGate { name: String, available: String },

    #[error("optimization aborted: {0}")]
    Aborted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
