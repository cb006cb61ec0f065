use thiserror::Error;

/// Everything that can go wrong during evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("overflow: {0}")]
    Overflow(String),

    #[error("gamma pole at nonpositive integer {0}")]
    GammaPole(f64),

    #[error("quadrature failed to converge: {0}")]
    QuadratureNonConverged(String),

    #[error("divergent: {0}")]
    Divergence(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("bracket failure: {0}")]
    BracketFailure(String),

    #[error("iteration failed to converge: {0}")]
    NonConvergence(String),

    #[error("root table too small: {0}")]
    InsufficientRoots(String),

    #[error("evaluation point within the exclusion radius of the pole at s = {0}")]
    PoleProximity(f64),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("polynomial degree {0} exceeds the supported limit")]
    DegreeOverflow(usize),

    #[error("series converges too slowly at Re(s) = {0}; use the integral route")]
    SlowConvergence(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
