//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CpError {
    /// Invalid or non-finite input.
    #[error("validation error: {0}")]
    Validation(String),

    /// Input outside the mathematical domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// A denominator vanished (degenerate Fresnel configuration).
    #[error("singularity: {0}")]
    Singularity(String),

    /// Quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    NonConvergence { achieved: f64, requested: f64 },

    /// Asymptotic block requested where no scale separation holds.
    #[error("crossover regime: {0}")]
    Crossover(String),

    /// Extrapolation oracle could not settle on a value.
    #[error("oracle inconclusive: {0}")]
    OracleInconclusive(String),
}
