//! Error type shared across the library.

use thiserror::Error;

/// Errors raised when building preferences or strategies from raw values.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A bias component fell outside `[-1/2, 1/2]` (or was not finite).
    #[error("preference bias alpha{gate} = {value} lies outside [-1/2, 1/2]")]
    BiasOutOfRange {
        /// Gate index (0 or 1) the offending component belongs to.
        gate: usize,
        /// The rejected value.
        value: f64,
    },
    /// A bias magnitude fell outside `[0, 1/2]` (or was not finite).
    #[error("bias magnitude {value} lies outside [0, 1/2]")]
    MagnitudeOutOfRange {
        /// The rejected value.
        value: f64,
    },
    /// A strategy index outside the four families.
    #[error("strategy index {0} lies outside 1..=4")]
    UnknownStrategyIndex(u8),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
