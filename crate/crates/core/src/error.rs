use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("evaluation of a polynomial with negative exponents at zero")]
    ZeroEvaluation,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires an ordinary polynomial (no negative exponents)")]
    NotPolynomial,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{0}: argument must be positive")]
    NonPositive(&'static str),

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(String),
    #[error("spectrum outside the admissible set: {0}")]
    Spectrum(String),
    #[error("pairing values must be pairwise distinct: {0}")]
    RepeatedPairing(String),
    #[error("invalid Donaldson series model: {0}")]
    InvalidModel(String),

    #[error("Conway polynomial violates normal form: {0}")]
    ConwayNormalForm(String),
    #[error("unregistered knot or link: {0}")]
    Unregistered(String),
    #[error("({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),

    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("slope out of range: {0}")]
    SlopeRange(String),
    #[error("inconsistent rank data: {0}")]
    Rank(String),
    #[error("unsupported cable surgery slope: {0}")]
    CableSlope(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("lens space: no Stein plumbing (k <= 2, e >= -1)")]
    LensSpace,
    #[error("not an integer homology sphere (|H1| = {0})")]
    NotHomologySphere(String),
    #[error("no classification rule applies: {0}")]
    Unclassified(String),

    #[error("inconsistent query data: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
