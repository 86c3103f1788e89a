// SPDX-License-Identifier: MIT OR Apache-2.0

//! Input pairs, prefix sums and O(1) interval scores.
//!
//! Positions are 1-based. Internally a prefix boundary `t` in `0..=n`
//! refers to `P[t]`, the sum of the first `t` entries, so the interval
//! `[i, j]` spans boundaries `i - 1` and `j`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{NumericMode, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumberPair<T> {
    pub h: T,
    pub s: T,
}

impl<T: Scalar> NumberPair<T> {
    pub fn new(h: T, s: T) -> Self {
        NumberPair { h, s }
    }

    /// A pair with unit support.
    pub fn plain(h: T) -> Self {
        NumberPair { h, s: T::ONE }
    }
}

/// A validated sequence: every support is positive and every prefix sum
/// stays within the numeric range of `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairSequence<T> {
    pairs: Vec<NumberPair<T>>,
    plain: bool,
}

/// Checks positivity of supports and the magnitude of values and prefix
/// sums.
pub fn validate_sequence<T: Scalar>(pairs: Vec<NumberPair<T>>) -> Result<PairSequence<T>> {
    let mut hit = T::ZERO;
    let mut sup = T::ZERO;
    for (idx, pair) in pairs.iter().enumerate() {
        let position = idx + 1;
        hit = extend_prefix(hit, pair.h, position)?;
        sup = extend_prefix(sup, pair.s, position)?;
        if pair.s <= T::ZERO {
            return Err(Error::NonPositiveSupport { position });
        }
    }
    let plain = pairs.iter().all(|p| p.s == T::ONE);
    Ok(PairSequence { pairs, plain })
}

fn extend_prefix<T: Scalar>(acc: T, value: T, position: usize) -> Result<T> {
    if !value.is_finite() {
        return Err(Error::NonFinite { position });
    }
    match acc.checked_add(value) {
        Some(next) if value.in_range() && next.in_range() => Ok(next),
        _ => Err(Error::Magnitude { position }),
    }
}

impl<T: Scalar> PairSequence<T> {
    pub fn new(pairs: Vec<NumberPair<T>>) -> Result<Self> {
        validate_sequence(pairs)
    }

    /// A plain sequence (all supports one) from hit values.
    pub fn from_hits(hits: &[T]) -> Result<Self> {
        validate_sequence(hits.iter().map(|&h| NumberPair::plain(h)).collect())
    }

    pub fn from_pairs(raw: &[(T, T)]) -> Result<Self> {
        validate_sequence(raw.iter().map(|&(h, s)| NumberPair::new(h, s)).collect())
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_plain(&self) -> bool {
        self.plain
    }

    pub fn mode(&self) -> NumericMode {
        T::MODE
    }

    pub fn pairs(&self) -> &[NumberPair<T>] {
        &self.pairs
    }

    /// The pair at 1-based `position`.
    pub fn get(&self, position: usize) -> Option<NumberPair<T>> {
        position.checked_sub(1).and_then(|i| self.pairs.get(i)).copied()
    }

    pub fn hits(&self) -> impl Iterator<Item = T> + '_ {
        self.pairs.iter().map(|p| p.h)
    }

    pub fn prefix_sums(&self) -> PrefixSums<T> {
        build_prefix_sums(self)
    }
}

/// Prefix arrays `P_H` and `P_S`, both of length `n + 1` with a leading zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefixSums<T> {
    hit: Vec<T>,
    sup: Vec<T>,
}

pub fn build_prefix_sums<T: Scalar>(seq: &PairSequence<T>) -> PrefixSums<T> {
    let mut prefix = PrefixSums::with_capacity(seq.len());
    for &pair in seq.pairs() {
        prefix.push_unchecked(pair);
    }
    prefix
}

/// Which interval score to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreKind {
    Support,
    Hit,
    Confidence,
    Eccentricity,
}

impl<T: Scalar> Default for PrefixSums<T> {
    fn default() -> Self {
        Self::with_capacity(0)
    }
}

impl<T: Scalar> PrefixSums<T> {
    pub fn with_capacity(n: usize) -> Self {
        let mut hit = Vec::with_capacity(n + 1);
        let mut sup = Vec::with_capacity(n + 1);
        hit.push(T::ZERO);
        sup.push(T::ZERO);
        PrefixSums { hit, sup }
    }

    /// Appends one pair, validating it against the running sums.
    pub fn push(&mut self, pair: NumberPair<T>) -> Result<()> {
        let position = self.len() + 1;
        let hit = extend_prefix(self.total_hit(), pair.h, position)?;
        let sup = extend_prefix(self.total_sup(), pair.s, position)?;
        if pair.s <= T::ZERO {
            return Err(Error::NonPositiveSupport { position });
        }
        self.hit.push(hit);
        self.sup.push(sup);
        Ok(())
    }

    fn push_unchecked(&mut self, pair: NumberPair<T>) {
        let hit = self.total_hit() + pair.h;
        let sup = self.total_sup() + pair.s;
        self.hit.push(hit);
        self.sup.push(sup);
    }

    /// Number of pairs covered.
    pub fn len(&self) -> usize {
        self.hit.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hit_prefix(&self) -> &[T] {
        &self.hit
    }

    pub fn sup_prefix(&self) -> &[T] {
        &self.sup
    }

    fn total_hit(&self) -> T {
        *self.hit.last().expect("prefix arrays are never empty")
    }

    fn total_sup(&self) -> T {
        *self.sup.last().expect("prefix arrays are never empty")
    }

    /// `P_H[t]`.
    #[inline]
    pub fn boundary_hit(&self, t: usize) -> T {
        self.hit[t]
    }

    /// `P_S[t]`.
    #[inline]
    pub fn boundary_sup(&self, t: usize) -> T {
        self.sup[t]
    }

    /// Hit-sum between boundaries `a < b`, i.e. `hit(a + 1, b)`.
    #[inline]
    pub fn span_hit(&self, a: usize, b: usize) -> T {
        self.hit[b] - self.hit[a]
    }

    /// Support between boundaries `a < b`.
    #[inline]
    pub fn span_sup(&self, a: usize, b: usize) -> T {
        self.sup[b] - self.sup[a]
    }

    /// `hit(i, j)` for `1 <= i <= j <= n`.
    #[inline]
    pub fn hit(&self, i: usize, j: usize) -> T {
        self.span_hit(i - 1, j)
    }

    /// `sup(i, j)` for `1 <= i <= j <= n`.
    #[inline]
    pub fn sup(&self, i: usize, j: usize) -> T {
        self.span_sup(i - 1, j)
    }

    pub fn scored(&self, interval: IndexInterval) -> Scored<T> {
        Scored {
            interval,
            hit: self.hit(interval.start, interval.end),
            support: self.sup(interval.start, interval.end),
        }
    }

    /// Evaluates one score over `[i, j]`, rejecting out-of-range indices.
    pub fn score(&self, i: usize, j: usize, kind: ScoreKind) -> Result<f64> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::usage(format!(
                "interval [{i}, {j}] outside 1..={}",
                self.len()
            )));
        }
        let scored = self.scored(IndexInterval::new(i, j));
        Ok(match kind {
            ScoreKind::Support => scored.support.to_f64(),
            ScoreKind::Hit => scored.hit.to_f64(),
            ScoreKind::Confidence => scored.confidence(),
            ScoreKind::Eccentricity => scored.eccentricity(),
        })
    }
}

/// A 1-based inclusive interval `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexInterval {
    pub start: usize,
    pub end: usize,
}

impl IndexInterval {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(1 <= start && start <= end);
        IndexInterval { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// An interval together with the sums that define its scores.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scored<T> {
    pub interval: IndexInterval,
    pub hit: T,
    pub support: T,
}

impl<T: Scalar> Scored<T> {
    pub fn confidence(&self) -> f64 {
        self.hit.to_f64() / self.support.to_f64()
    }

    pub fn eccentricity(&self) -> f64 {
        self.hit.to_f64() / self.support.to_f64().sqrt()
    }

    pub fn cmp_conf(&self, other: &Self) -> Ordering {
        T::cmp_conf(self.hit, self.support, other.hit, other.support)
    }

    pub fn cmp_ecc(&self, other: &Self) -> Ordering {
        T::cmp_ecc(self.hit, self.support, other.hit, other.support)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prefix_examples() {
        let seq = PairSequence::from_pairs(&[(2i64, 1), (-1, 1), (3, 1)]).unwrap();
        let p = seq.prefix_sums();
        assert_eq!(p.hit_prefix(), &[0, 2, 1, 4]);
        assert_eq!(p.sup_prefix(), &[0, 1, 2, 3]);

        let empty = PairSequence::<i64>::from_pairs(&[]).unwrap();
        assert_eq!(empty.prefix_sums().hit_prefix(), &[0]);
        assert_eq!(empty.prefix_sums().sup_prefix(), &[0]);

        let single = PairSequence::from_pairs(&[(5i64, 2)]).unwrap();
        assert_eq!(single.prefix_sums().hit_prefix(), &[0, 5]);
        assert_eq!(single.prefix_sums().sup_prefix(), &[0, 2]);
    }

    #[test]
    fn score_examples() {
        let p = PairSequence::from_pairs(&[(2i64, 1), (-1, 1), (3, 1)])
            .unwrap()
            .prefix_sums();
        assert_eq!(p.hit(1, 3), 4);
        assert_eq!(p.score(1, 3, ScoreKind::Confidence).unwrap(), 4.0 / 3.0);
        assert_eq!(p.score(2, 3, ScoreKind::Eccentricity).unwrap(), 2.0 / 2f64.sqrt());
        assert_eq!(p.sup(2, 2), 1);
        assert_eq!(p.hit(2, 2), -1);
        assert!(p.score(0, 1, ScoreKind::Hit).is_err());
        assert!(p.score(2, 1, ScoreKind::Hit).is_err());
        assert!(p.score(1, 4, ScoreKind::Hit).is_err());
    }

    #[test]
    fn validation() {
        let seq = PairSequence::from_pairs(&[(1i64, 1), (2, 1)]).unwrap();
        assert!(seq.is_plain());
        let seq = PairSequence::from_pairs(&[(1i64, 2)]).unwrap();
        assert!(!seq.is_plain());
        assert_eq!(
            PairSequence::from_pairs(&[(1i64, 0)]).unwrap_err(),
            Error::NonPositiveSupport { position: 1 }
        );
        assert_eq!(
            PairSequence::from_pairs(&[(1.0, 1.0), (f64::NAN, 1.0)]).unwrap_err(),
            Error::NonFinite { position: 2 }
        );
        assert_eq!(
            PairSequence::from_pairs(&[(crate::scalar::EXACT_LIMIT, 1), (1, 1)]).unwrap_err(),
            Error::Magnitude { position: 2 }
        );
    }

    #[test]
    fn incremental_push_matches_batch() {
        let raw = [(3i64, 2), (-4, 1), (7, 5)];
        let batch = PairSequence::from_pairs(&raw).unwrap().prefix_sums();
        let mut inc = PrefixSums::default();
        for (h, s) in raw {
            inc.push(NumberPair::new(h, s)).unwrap();
        }
        assert_eq!(batch, inc);
        assert!(inc.push(NumberPair::new(1, -1)).is_err());
        assert_eq!(inc.len(), 3);
    }

    proptest! {
        #[test]
        fn hit_matches_direct_sum(raw in prop::collection::vec((-1000i64..1000, 1i64..50), 1..40)) {
            let seq = PairSequence::from_pairs(&raw).unwrap();
            let p = seq.prefix_sums();
            for w in p.sup_prefix().windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for i in 1..=raw.len() {
                for j in i..=raw.len() {
                    let direct: i64 = raw[i - 1..j].iter().map(|r| r.0).sum();
                    prop_assert_eq!(p.hit(i, j), direct);
                }
            }
        }

        #[test]
        fn float_hit_close_to_direct(raw in prop::collection::vec((-1e3f64..1e3, 0.5f64..5.0), 1..30)) {
            let seq = PairSequence::from_pairs(&raw).unwrap();
            let p = seq.prefix_sums();
            let scale: f64 = raw.iter().map(|r| r.0.abs()).sum::<f64>().max(1.0);
            for i in 1..=raw.len() {
                for j in i..=raw.len() {
                    let direct: f64 = raw[i - 1..j].iter().map(|r| r.0).sum();
                    prop_assert!((p.hit(i, j) - direct).abs() <= 1e-12 * scale);
                }
            }
        }
    }
}
