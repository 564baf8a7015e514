use thiserror::Error;

/// Errors raised by code construction, maps and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the domain of an operation (bad symbol, odd
    /// length, residue out of range, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration or sphere computation would exceed the configured cap.
    #[error("resource guard: {what} needs {needed} items, cap is {cap}")]
    Resource {
        what: &'static str,
        needed: String,
        cap: u128,
    },

    /// Exact integer arithmetic overflowed.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// A name or identifier did not resolve (unknown map, unknown table).
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
