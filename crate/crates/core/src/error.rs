use thiserror::Error;

/// Errors surfaced by the library. Validation failures carry enough context
/// to name the violated condition in CLI output.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("scale matrix is not symmetric (max asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("scale matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("shape component {index} is out of range: |{value}| > 1")]
    ShapeComponentOutOfRange { index: usize, value: f64 },

    #[error("shape quadratic form delta' Omega^-1 delta = {value} must be < 1")]
    ShapeQuadFormTooLarge { value: f64 },

    #[error("{family}: radial moment of order {order} does not exist (requires {condition})")]
    MomentExistence {
        family: String,
        order: u32,
        condition: String,
    },

    #[error("quadrature did not converge: best estimate {estimate:.9e} with error bound {error_bound:.3e}")]
    Quadrature { estimate: f64, error_bound: f64 },

    #[error("no sign change on bracket [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("marginal density not available for the {family} generator")]
    UnsupportedMarginal { family: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
