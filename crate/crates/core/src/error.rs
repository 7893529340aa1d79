use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A series division (or log) required a nonzero constant term.
    #[error("constant term {magnitude:e} below epsilon in {context}")]
    ZeroConstantTerm {
        context: &'static str,
        magnitude: f64,
    },

    /// `powf` requires the base series to have constant term exactly 1.
    #[error("power base has constant term {found} (expected 1)")]
    NonUnitBase { found: Complex64 },

    /// Lower parameter of a hypergeometric-type series is a nonpositive integer.
    #[error("parameter {value} is within 1e-12 of a nonpositive integer")]
    PoleParameter { value: f64 },

    /// Sector membership is undefined at the origin.
    #[error("sector margin queried at w = 0")]
    OriginPoint,

    /// A normalized function must have constant coefficient exactly 1.
    #[error("constant coefficient {found} is not exactly 1")]
    NotNormalized { found: Complex64 },

    /// A map could not be evaluated at a sample point.
    #[error("evaluation failed at z = {z} ({what})")]
    EvaluationFailure { z: Complex64, what: &'static str },

    /// The map vanishes at a sampled circle point.
    #[error("|map| < 1e-12 at z = {z}")]
    ZeroOnCircle { z: Complex64 },

    /// f' vanishes at a grid point.
    #[error("derivative vanishes at z = {z}")]
    ZeroDerivative { z: Complex64 },

    /// A denominator vanishes at a grid point.
    #[error("denominator {context} vanishes at z = {z}")]
    ZeroDenominator { context: &'static str, z: Complex64 },

    /// No parameter in the admissible range satisfies the criterion.
    #[error("criterion not applicable: {reason}")]
    NotApplicable { reason: &'static str },

    /// Input outside the mathematical domain of the formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Boundary parametrization is singular at the requested parameter.
    #[error("parametrization singular at t = {t}")]
    SingularParameter { t: f64 },

    /// Malformed user input (CLI / file).
    #[error("bad input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
