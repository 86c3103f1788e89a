// SPDX-License-Identifier: MIT OR Apache-2.0

//! Constrained optimal intervals over sequences of `(hit, support)` pairs.
//!
//! Two problems are solved exactly:
//!
//! * [`hci`]: find the interval of maximum confidence `Σh / Σs` among the
//!   intervals whose hit-sum reaches a lower bound, offline or one pair at
//!   a time.
//! * [`psei`]: for plain sequences (every support equal to one), find the
//!   interval of maximum eccentricity `Σh / √length` among the intervals
//!   whose length reaches a lower bound.
//!
//! The eccentricity solver is built on the tropical kernel in [`minplus`]
//! (min-plus convolution via blocked min-plus matrix products). Every fast
//! path has a brute-force counterpart in [`oracle`].
//!
//! Arithmetic is generic over [`Scalar`]: `i64` gives exact comparisons
//! through wide cross-multiplication, `f64` compares quotients directly.

#![forbid(unsafe_code)]

pub mod error;
pub mod hci;
pub mod minplus;
pub mod oracle;
pub mod psei;
pub mod scalar;
pub mod sequence;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::Error;
pub use scalar::{compare_conf, compare_ecc, NumericMode, Scalar};
pub use sequence::{
    build_prefix_sums, validate_sequence, IndexInterval, NumberPair, PairSequence, PrefixSums,
    ScoreKind, Scored,
};
