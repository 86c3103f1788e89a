// SPDX-License-Identifier: MIT OR Apache-2.0

//! Numeric modes and the exact order comparators for confidence and
//! eccentricity.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Neg, Sub};

/// How values are represented and compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumericMode {
    /// Integral inputs, comparisons by wide-integer cross-multiplication.
    Exact,
    /// 64-bit binary floating point, comparisons by quotient.
    Float,
}

/// Largest magnitude accepted for inputs and prefix sums in exact mode.
///
/// Differences of two prefix sums and sums of two tropical entries both stay
/// inside `i64`, and squared differences stay inside `u128`.
pub const EXACT_LIMIT: i64 = 1 << 61;

const FLOAT_LIMIT: f64 = f64::MAX / 4.0;

/// A number type the interval solvers can run on.
pub trait Scalar:
    Copy
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const ZERO: Self;
    const ONE: Self;
    const MODE: NumericMode;

    /// Orders `h1/s1` against `h2/s2`. Both supports must be positive.
    fn cmp_conf(h1: Self, s1: Self, h2: Self, s2: Self) -> Ordering;

    /// Orders `h1/√l1` against `h2/√l2`. Both supports must be positive.
    fn cmp_ecc(h1: Self, l1: Self, h2: Self, l2: Self) -> Ordering;

    /// Total order on finite values.
    fn cmp_value(self, other: Self) -> Ordering;

    fn from_usize(n: usize) -> Self;

    fn to_f64(self) -> f64;

    /// `None` on overflow (exact) or a non-finite result (float).
    fn checked_add(self, other: Self) -> Option<Self>;

    /// Whether the value may enter a prefix sum or a tropical addition
    /// without any later difference or pairwise sum overflowing.
    fn in_range(self) -> bool;

    fn is_finite(self) -> bool;
}

impl Scalar for i64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;
    const MODE: NumericMode = NumericMode::Exact;

    fn cmp_conf(h1: i64, s1: i64, h2: i64, s2: i64) -> Ordering {
        debug_assert!(s1 > 0 && s2 > 0);
        (h1 as i128 * s2 as i128).cmp(&(h2 as i128 * s1 as i128))
    }

    fn cmp_ecc(h1: i64, l1: i64, h2: i64, l2: i64) -> Ordering {
        debug_assert!(l1 > 0 && l2 > 0);
        let (sign1, sign2) = (h1.signum(), h2.signum());
        if sign1 != sign2 {
            return sign1.cmp(&sign2);
        }
        if sign1 == 0 {
            return Ordering::Equal;
        }
        let lhs = square_times(h1.unsigned_abs(), l2 as u64);
        let rhs = square_times(h2.unsigned_abs(), l1 as u64);
        if sign1 > 0 {
            lhs.cmp(&rhs)
        } else {
            rhs.cmp(&lhs)
        }
    }

    fn cmp_value(self, other: i64) -> Ordering {
        self.cmp(&other)
    }

    fn from_usize(n: usize) -> i64 {
        i64::try_from(n).expect("length exceeds i64")
    }

    fn to_f64(self) -> f64 {
        self as f64
    }

    fn checked_add(self, other: i64) -> Option<i64> {
        i64::checked_add(self, other)
    }

    fn in_range(self) -> bool {
        self.unsigned_abs() <= EXACT_LIMIT as u64
    }

    fn is_finite(self) -> bool {
        true
    }
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    const MODE: NumericMode = NumericMode::Float;

    fn cmp_conf(h1: f64, s1: f64, h2: f64, s2: f64) -> Ordering {
        (h1 / s1).total_cmp(&(h2 / s2))
    }

    fn cmp_ecc(h1: f64, l1: f64, h2: f64, l2: f64) -> Ordering {
        (h1 / l1.sqrt()).total_cmp(&(h2 / l2.sqrt()))
    }

    fn cmp_value(self, other: f64) -> Ordering {
        self.total_cmp(&other)
    }

    fn from_usize(n: usize) -> f64 {
        n as f64
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn checked_add(self, other: f64) -> Option<f64> {
        let sum = self + other;
        sum.is_finite().then_some(sum)
    }

    fn in_range(self) -> bool {
        self.is_finite() && self.abs() <= FLOAT_LIMIT
    }

    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

/// `a² · b` as a 192-bit value `(high 64 bits, low 128 bits)`.
fn square_times(a: u64, b: u64) -> (u64, u128) {
    let sq = a as u128 * a as u128;
    let lo_part = (sq as u64) as u128 * b as u128;
    let hi_part = (sq >> 64) * b as u128;
    let (lo, carry) = lo_part.overflowing_add(hi_part << 64);
    ((hi_part >> 64) as u64 + carry as u64, lo)
}

/// Orders the confidences `h1/s1` and `h2/s2`.
pub fn compare_conf<T: Scalar>(h1: T, s1: T, h2: T, s2: T) -> Ordering {
    T::cmp_conf(h1, s1, h2, s2)
}

/// Orders the eccentricities `h1/√l1` and `h2/√l2`.
pub fn compare_ecc<T: Scalar>(h1: T, l1: T, h2: T, l2: T) -> Ordering {
    T::cmp_ecc(h1, l1, h2, l2)
}
