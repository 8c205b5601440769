use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("partition {lambda} is not typical for the hook ({k},{l})")]
    NotTypical { lambda: String, k: usize, l: usize },
    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("variable tables differ")]
    VarTableMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("substitution image for `{0}` is not a signed unit monomial")]
    NonMonomialImage(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("alphabet must consist of distinct plain variables")]
    RepeatedVariable,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("factor (1{sign:+}u^{exponent}) is not invertible over the integers")]
    NonInvertibleFactor { sign: i8, exponent: u32 },
    #[error("invalid hook: {0}")]
    InvalidHook(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
