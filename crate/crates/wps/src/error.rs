use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every domain failure the library can report.
///
/// Each variant maps to a stable code (see [`Error::code`]) that the command
/// line front end prints and that JSON consumers can match on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("polynomial is not weighted-homogeneous")]
    NotHomogeneous,
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("step does not satisfy its case preconditions: {0}")]
    BadCase(String),
    #[error("degree bound {bound} is below the required minimum {minimum}")]
    BoundTooSmall { bound: u64, minimum: u64 },
    #[error("points are not comparable: {0}")]
    Mismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("point has zero coordinate {0}, so it is not on that affine patch")]
    NotOnPatch(usize),
    #[error("prime {p} is unsuitable: need p = 1 mod {modulus}")]
    PrimeUnsuitable { p: u64, modulus: u64 },
    #[error("weight {0} is not well-formed")]
    NotWellFormed(String),
    #[error("curve is not sufficiently general: {0}")]
    NotSufficientlyGeneral(String),
    #[error("all coordinates are zero")]
    NotAConePoint,
    #[error("edge restriction {0} is identically zero")]
    DegenerateEdge(usize),
    #[error("degree {d} and weight {weight} violate the curve constraints: {reason}")]
    InvalidDegreeWeight { d: u64, weight: String, reason: String },
    #[error("genus formula gives the non-integer {value} for d={d}, weight {weight}")]
    NonIntegerGenus { d: u64, weight: String, value: String },
    #[error("no override for l({0}) in the range where Riemann-Roch does not decide it")]
    AmbiguousLowDegree(u64),
    #[error("override for l({0}) lies outside the range Riemann-Roch leaves open")]
    InvalidOverride(u64),
    #[error("series times the denominator does not terminate by degree {0}")]
    NumeratorNotPolynomial(u64),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("manifest line {line}: {msg}")]
    Manifest { line: usize, msg: String },
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::FieldMismatch { .. } => "E_FIELD_MISMATCH",
            Error::ZeroPolynomial => "E_ZERO_POLY",
            Error::NotPrime(_) => "E_NOT_PRIME",
            Error::InvalidWeight(_) => "E_WEIGHT",
            Error::NotHomogeneous => "E_NOT_HOMOGENEOUS",
            Error::IndexOutOfRange { .. } => "E_INDEX",
            Error::ArityMismatch { .. } => "E_ARITY",
            Error::BadCase(_) => "E_BAD_CASE",
            Error::BoundTooSmall { .. } => "E_BOUND",
            Error::Mismatch(_) => "E_MISMATCH",
            Error::Unsupported(_) => "E_UNSUPPORTED",
            Error::NotOnPatch(_) => "E_NOT_ON_PATCH",
            Error::PrimeUnsuitable { .. } => "E_PRIME_UNSUITABLE",
            Error::NotWellFormed(_) => "E_NOT_WELL_FORMED",
            Error::NotSufficientlyGeneral(_) => "E_NOT_GENERAL",
            Error::NotAConePoint => "E_ZERO_POINT",
            Error::DegenerateEdge(_) => "E_DEGENERATE_EDGE",
            Error::InvalidDegreeWeight { .. } => "E_DEGREE_WEIGHT",
            Error::NonIntegerGenus { .. } => "E_GENUS_NONINT",
            Error::AmbiguousLowDegree(_) => "E_AMBIGUOUS_ELL",
            Error::InvalidOverride(_) => "E_OVERRIDE",
            Error::NumeratorNotPolynomial(_) => "E_NUMERATOR",
            Error::TooLarge(_) => "E_TOO_LARGE",
            Error::Parse { .. } => "E_PARSE",
            Error::UnknownVariable(_) => "E_UNKNOWN_VAR",
            Error::Manifest { .. } => "E_MANIFEST",
        }
    }

    /// Parse and manifest errors are usage errors; everything else is a
    /// domain error.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidWeight(_)
                | Error::Parse { .. }
                | Error::UnknownVariable(_)
                | Error::Manifest { .. }
        )
    }
}
