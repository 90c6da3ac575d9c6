use thiserror::Error;

/// Errors raised by the gasket computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no root of the polynomial in the given interval")]
    NoRoot,
    #[error("the polynomial has {0} roots in the given interval, expected exactly one")]
    MultipleRoots(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("sign of a nonzero combination still undecided after {0} refinement rounds")]
    PrecisionExhausted(usize),
    #[error("resource limit exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceLimit { what: String, needed: u128, cap: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
