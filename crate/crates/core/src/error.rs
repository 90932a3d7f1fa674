use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("energy {0} is outside the period annulus")]
    EnergyOutOfAnnulus(f64),

    #[error("evaluation at {point} outside the admissible domain ({lo}, {hi})")]
    DomainViolation { point: f64, lo: f64, hi: f64 },

    #[error("quadrature error estimate {estimate:e} above tolerance {tolerance:e} with budget exhausted")]
    QuadratureFailure { estimate: f64, tolerance: f64 },

    #[error("no return event found within time budget {0}")]
    EventNotFound(f64),

    #[error("hamiltonian drift {drift:e} exceeded 100x tolerance {tolerance:e}")]
    DriftExceeded { drift: f64, tolerance: f64 },

    #[error("F never reattains the value {0} on the opposite side of the origin")]
    NoConjugate(f64),

    #[error("sign certificate is ambiguous at the available resolution")]
    ResolutionTooCoarse,

    #[error("no one-signed certificate found even at small energies")]
    NoCertifiedRegion,

    #[error("threshold constants are not defined for case {0}")]
    CaseMismatch(String),

    #[error("sigma has no root inside the period annulus")]
    NoRootInAnnulus,

    #[error("tangency residual does not change sign up to c = {0:e}")]
    NoBracket(f64),

    #[error("normalization requires a1 > 0 and b1 > 0, got a1 = {a1}, b1 = {b1}")]
    NonPositiveLinearPart { a1: f64, b1: f64 },

    #[error("invalid slug geometry: {0}")]
    InvalidGeometry(String),

    #[error("unknown example '{0}'")]
    UnknownExample(String),

    #[error("N(x) does not change sign before the domain edge ({0})")]
    NoSignChange(String),

    #[error("root bracketing failed: {0}")]
    BracketFailure(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
