// SPDX-License-Identifier: MIT OR Apache-2.0

//! Tropical (min, +) kernel: extended values with an absorbing top element,
//! min-plus matrix products with a pluggable square backend, and min-plus
//! convolution computed through one rectangular product.

mod convolution;
mod matrix;

pub use convolution::{block_width, blocked_convolution, blocked_convolution_with, build_block_matrices, naive_convolution};
pub use matrix::{rect_min_plus_product, square_min_plus_product, MinPlusBackend, MinPlusMatrix, NaiveBackend};

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite value or `Top`, the absorbing infinity of the (min, +) semiring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedValue<T> {
    Finite(T),
    Top,
}

pub use ExtendedValue::{Finite, Top};

impl<T: Scalar> ExtendedValue<T> {
    pub fn is_top(&self) -> bool {
        matches!(self, Top)
    }

    pub fn finite(&self) -> Option<T> {
        match *self {
            Finite(v) => Some(v),
            Top => None,
        }
    }

    /// `min`, with `Top` as the largest element.
    pub fn min(self, other: Self) -> Self {
        match (self, other) {
            (Top, v) | (v, Top) => v,
            (Finite(a), Finite(b)) => Finite(if b < a { b } else { a }),
        }
    }

    /// Total order with `Top` above every finite value.
    pub fn cmp_ext(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Top, Top) => Ordering::Equal,
            (Top, _) => Ordering::Greater,
            (_, Top) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp_value(*b),
        }
    }

    /// Whether adding any other in-range entry cannot overflow.
    pub(crate) fn addable(&self) -> bool {
        match self {
            Top => true,
            Finite(v) => v.in_range(),
        }
    }
}

impl<T: Scalar> fmt::Display for ExtendedValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Top => f.write_str("inf"),
        }
    }
}

/// `a + b` with `Top` absorbing; finite overflow is an error.
pub fn sat_add<T: Scalar>(a: ExtendedValue<T>, b: ExtendedValue<T>) -> Result<ExtendedValue<T>> {
    match (a, b) {
        (Finite(x), Finite(y)) => x
            .checked_add(y)
            .map(Finite)
            .ok_or_else(|| Error::Overflow(format!("{x} + {y}"))),
        _ => Ok(Top),
    }
}

/// Addition for operands already checked with `addable`.
#[inline]
pub(crate) fn add_in_range<T: Scalar>(a: T, b: T) -> T {
    a + b
}

/// A 0-based vector over the (min, +) semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct MinPlusVector<T>(Vec<ExtendedValue<T>>);

impl<T: Scalar> MinPlusVector<T> {
    pub fn new(entries: Vec<ExtendedValue<T>>) -> Self {
        MinPlusVector(entries)
    }

    pub fn from_finite(values: &[T]) -> Self {
        MinPlusVector(values.iter().map(|&v| Finite(v)).collect())
    }

    /// `(0, Top, ..., Top)`, the convolution identity of length `n`.
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Top; n];
        if let Some(first) = entries.first_mut() {
            *first = Finite(T::ZERO);
        }
        MinPlusVector(entries)
    }

    pub fn entries(&self) -> &[ExtendedValue<T>] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<ExtendedValue<T>> {
        self.0
    }

    pub(crate) fn check_addable(&self, what: &str) -> Result<()> {
        match self.0.iter().position(|v| !v.addable()) {
            None => Ok(()),
            Some(i) => Err(Error::Overflow(format!(
                "{what}[{i}] = {} is too large for exact addition",
                self.0[i]
            ))),
        }
    }
}

impl<T> Deref for MinPlusVector<T> {
    type Target = [ExtendedValue<T>];

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl<T: Scalar> FromIterator<ExtendedValue<T>> for MinPlusVector<T> {
    fn from_iter<I: IntoIterator<Item = ExtendedValue<T>>>(iter: I) -> Self {
        MinPlusVector(iter.into_iter().collect())
    }
}
