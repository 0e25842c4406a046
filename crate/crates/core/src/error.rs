use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("inconsistent Satake data: {0}")]
    InconsistentSatake(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("parameters: {0}")]
    Params(String),
    #[error("input: {0}")]
    Input(String),
    #[error("name: {0}")]
    Name(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for an invariant failure with a formatted message.
macro_rules! invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)+)));
        }
    };
}
pub(crate) use invariant;
