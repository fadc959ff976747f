use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("polynomial degree {got} is below the required minimum {need}")]
    DegreeTooLow { need: usize, got: isize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("M[p] has a pole at x = {x}")]
    Pole { x: String },

    #[error("kappa*(p')^2 - p*p'' vanishes identically (p is a perfect power at its limit kappa)")]
    DegenerateH,

    #[error("p is a constant multiple of a perfect power; the x-discriminant in kappa vanishes identically")]
    PerfectPower,

    #[error("{0}")]
    OutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the queried infinite interval contains a root of p (first type)")]
    FirstTypeInterval,

    #[error("no threshold: {0}")]
    NoThreshold(String),

    #[error("search exhausted at step {step}: {msg}")]
    SearchExhausted { step: usize, msg: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
