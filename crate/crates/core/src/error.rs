use alloc::string::String;

use crate::hypgeo::{Complex, Domain};

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the library can report. Each variant carries a stable
/// code (see [`Error::code`]) that front ends surface verbatim.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("point {value} lies outside the {domain}")]
    OutsideDomain { value: Complex, domain: Domain },

    #[error("points {z} and {w} are not on a common ray (arg(z/w) = {arg})")]
    ArgumentMismatch { z: Complex, w: Complex, arg: f64 },

    #[error("zero modulus where a nonzero complex number is required")]
    ZeroModulus,

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("quadrature did not reach tolerance: last estimate {last}, previous {previous}")]
    ToleranceNotMet { last: f64, previous: f64 },

    #[error("non-finite sample at theta = {theta}")]
    NonFiniteSample { theta: f64 },

    #[error("lifted center {center} is too close to the real axis for radius {radius} (shift {shift})")]
    WindowViolation { center: Complex, radius: f64, shift: f64 },

    #[error("density denominator is not positive ({value})")]
    NonPositiveDenominator { value: f64 },

    #[error("singular Gram system (min eigenvalue {min_eig}, max eigenvalue {max_eig})")]
    SingularSystem { min_eig: f64, max_eig: f64 },

    #[error("duplicate points at indices {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },

    #[error("point at index {index} is outside the {domain}")]
    PointOutsideDomain { index: usize, domain: Domain },

    #[error("zero of f within {distance} of the circle of radius {radius}")]
    ZeroNearCircle { distance: f64, radius: f64 },

    #[error("f vanishes at the center {0}")]
    ZeroAtCenter(Complex),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("inconsistent weight: {0}")]
    InconsistentWeight(String),

    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OutsideDomain { .. } => "E101",
            Error::ArgumentMismatch { .. } => "E102",
            Error::ZeroModulus => "E103",
            Error::InvalidParameter { .. } => "E104",
            Error::ToleranceNotMet { .. } => "E201",
            Error::NonFiniteSample { .. } => "E202",
            Error::WindowViolation { .. } => "E301",
            Error::NonPositiveDenominator { .. } => "E302",
            Error::SingularSystem { .. } => "E401",
            Error::DuplicatePoint { .. } => "E501",
            Error::PointOutsideDomain { .. } => "E502",
            Error::ZeroNearCircle { .. } => "E601",
            Error::ZeroAtCenter(_) => "E602",
            Error::LengthMismatch { .. } => "E603",
            Error::InconsistentWeight(_) => "E701",
            Error::Unsupported(_) => "E702",
        }
    }

    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}

pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Error {
    Error::param(name, reason)
}
