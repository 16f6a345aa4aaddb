use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the Hurwitz-Radon function is defined for q >= 1")]
    ZeroDimension,

    #[error("fiber dimension {p} leaves no base in ambient dimension {n}")]
    NoBase { p: u64, n: u64 },

    #[error("no skew ({p},{n})-fibration: {p} > rho({q})-1 = {bound}", q = n - p, bound = rho_q - 1)]
    NotRealizable { p: u64, n: u64, rho_q: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("family is not a Hurwitz-Radon family: {0}")]
    InvalidFamily(String),

    #[error("cannot restrict a fibration by points")]
    RestrictPoints,

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
