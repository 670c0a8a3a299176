use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// An exhaustive search would need more steps than the caller allowed.
    #[error("resource budget exceeded: needs {needed}, budget is {budget}")]
    Budget { needed: u128, budget: u128 },
    /// A constructed object failed one of its own invariants.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::Error::Domain(alloc::format!($($arg)*)) };
}

macro_rules! consistency {
    ($($arg:tt)*) => { $crate::Error::Consistency(alloc::format!($($arg)*)) };
}

pub(crate) use {consistency, domain};
