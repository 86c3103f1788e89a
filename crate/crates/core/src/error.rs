// SPDX-License-Identifier: MIT OR Apache-2.0

use thiserror::Error;

/// Errors raised by validation, argument checks and exact arithmetic.
///
/// Positions are 1-based, matching the external interval convention.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("support must be positive (position {position})")]
    NonPositiveSupport { position: usize },

    #[error("value is not finite (position {position})")]
    NonFinite { position: usize },

    #[error("value magnitude exceeds the exact-arithmetic range (position {position})")]
    Magnitude { position: usize },

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// The 1-based input position an error refers to, if any.
    pub fn position(&self) -> Option<usize> {
        match *self {
            Error::NonPositiveSupport { position }
            | Error::NonFinite { position }
            | Error::Magnitude { position } => Some(position),
            Error::Usage(_) | Error::Overflow(_) => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
