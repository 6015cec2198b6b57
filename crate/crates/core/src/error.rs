use thiserror::Error;

/// Errors shared across the graph, linear-algebra and simulation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,

    #[error("edge ({u}, {v}) out of range for a graph on {n} nodes")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix entry at ({row}, {col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("SVD did not converge within {sweeps} sweeps")]
    NumericalFailure { sweeps: usize },

    #[error("eigendecomposition did not converge within {sweeps} sweeps")]
    EigenFailure { sweeps: usize },

    #[error("truncation threshold {zeta:e} lies on a singular value")]
    ThresholdOnSingularValue { zeta: f64 },

    #[error("no threshold clear of the spectrum found after {retries} draws")]
    ThresholdUnresolvable { retries: usize },

    #[error("spectral bound violated: sigma_1 = {sigma1:e} exceeds Z = {z:e}")]
    SpectralBoundViolated { sigma1: f64, z: f64 },

    #[error("raw value {raw} is too far from an integer (budget {budget}); promise likely violated")]
    PromiseViolationSuspected { raw: f64, budget: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
