use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input (partition or cycle-type syntax).
    #[error("parse error: {0}")]
    Parse(String),
    /// An argument outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A brute-force oracle was asked for an instance beyond its hard size limit.
    #[error("size guard: {what} is {got}, limit is {limit}")]
    Guard { what: &'static str, got: usize, limit: usize },
    /// Shape and cycle type (or group sizes) disagree.
    #[error("size mismatch: shape has {shape} cells but cycle type has size {class}")]
    SizeMismatch { shape: usize, class: usize },
    /// Two independent computations that must agree did not.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
