// SPDX-License-Identifier: MIT OR Apache-2.0

//! Length-constrained maximum-eccentricity intervals on plain sequences.
//!
//! Maximize `ecc(i, j) = hit(i, j) / √(j - i + 1)` subject to
//! `j - i + 1 >= L`. The driver first finds the maximum hit-sum under the
//! same constraint and splits on its sign:
//!
//! * zero: that interval is optimal (every eccentricity is `<= 0`);
//! * positive: the optimum is found by a lower-hull search over prefix
//!   boundaries ([`max_ecc_positive_case`]);
//! * negative: the optimum is shorter than `2L`, so it lies inside one of
//!   the overlapping blocks `[2kL + 1, 2kL + 4L]`, each solved through the
//!   maximum-consecutive-sums profile computed by min-plus convolution.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::minplus::{blocked_convolution_with, MinPlusBackend, MinPlusVector, NaiveBackend};
use crate::scalar::Scalar;
use crate::sequence::{IndexInterval, PairSequence, PrefixSums, Scored};

/// `f(len, hit) = hit / √len` for `hit >= 0`, else 0. Quasiconvex on
/// `(0, ∞) x R`, which is what makes the hull search sound.
pub fn clipped_eccentricity(len: f64, hit: f64) -> f64 {
    if hit >= 0.0 {
        hit / len.sqrt()
    } else {
        0.0
    }
}

fn scored_len<T: Scalar>(prefix: &PrefixSums<T>, interval: IndexInterval) -> Scored<T> {
    Scored {
        interval,
        hit: prefix.hit(interval.start, interval.end),
        support: T::from_usize(interval.len()),
    }
}

fn check_length<T: Scalar>(prefix: &PrefixSums<T>, min_len: usize) -> Result<()> {
    if min_len == 0 || min_len > prefix.len() {
        return Err(Error::usage(format!(
            "length lower bound {min_len} outside 1..={}",
            prefix.len()
        )));
    }
    Ok(())
}

/// Maximum hit-sum over intervals of length at least `min_len`, in O(n).
///
/// Ties keep the smallest right endpoint, then the longest interval.
pub fn max_hit_min_length<T: Scalar>(prefix: &PrefixSums<T>, min_len: usize) -> Result<Scored<T>> {
    check_length(prefix, min_len)?;
    let mut low = 0usize;
    let mut best: Option<(usize, usize)> = None;
    for j in min_len..=prefix.len() {
        let t = j - min_len;
        if prefix.boundary_hit(t) < prefix.boundary_hit(low) {
            low = t;
        }
        let better = best.is_none_or(|(bt, bj)| {
            prefix.span_hit(low, j) > prefix.span_hit(bt, bj)
        });
        if better {
            best = Some((low, j));
        }
    }
    let (t, j) = best.expect("at least one admissible interval");
    Ok(scored_len(prefix, IndexInterval::new(t + 1, j)))
}

/// Maximum eccentricity when some admissible interval has a positive sum.
///
/// For a right end `j` the candidates are boundaries `t <= j - L`; the
/// maximizer of `(P[j] - P[t]) / √(j - t)` is a vertex of the lower convex
/// hull of the points `(t, P[t])`, since the clipped score is quasiconvex
/// and non-decreasing in the hit-sum. The hull grows as `t = j - L` becomes
/// admissible and every vertex is evaluated, so the cost is
/// `O(n * hull size)`.
pub fn max_ecc_positive_case<T: Scalar>(prefix: &PrefixSums<T>, min_len: usize) -> Result<Scored<T>> {
    check_length(prefix, min_len)?;
    let mut hull: Vec<usize> = Vec::new();
    let mut best: Option<Scored<T>> = None;
    for j in min_len..=prefix.len() {
        let t = j - min_len;
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let order = T::cmp_conf(
                prefix.span_hit(a, b),
                T::from_usize(b - a),
                prefix.span_hit(b, t),
                T::from_usize(t - b),
            );
            if order == Ordering::Less {
                break;
            }
            hull.pop();
        }
        hull.push(t);

        for &v in &hull {
            let cand = Scored {
                interval: IndexInterval::new(v + 1, j),
                hit: prefix.span_hit(v, j),
                support: T::from_usize(j - v),
            };
            if best.is_none_or(|b| cand.cmp_ecc(&b) == Ordering::Greater) {
                best = Some(cand);
            }
        }
    }
    match best {
        Some(b) if b.hit > T::ZERO => Ok(b),
        _ => Err(Error::usage(
            "no admissible interval has a positive hit-sum",
        )),
    }
}

/// `w_j` for `j = 1..=m`: the largest sum over `j` consecutive values.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxSumsProfile<T> {
    w: Vec<T>,
}

impl<T: Scalar> MaxSumsProfile<T> {
    /// `w_j` for 1-based `j`.
    pub fn get(&self, j: usize) -> T {
        self.w[j - 1]
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.w
    }
}

/// Maximum consecutive sums through one min-plus convolution.
///
/// With prefix sums `P[0..=m]`, take `x = (P[0], ..., P[m])` and
/// `y = (-P[m], ..., -P[0])`. Then `z_{m-j} = min_i P[i] - P[i+j]`, so
/// `w_j = -z_{m-j}`.
pub fn max_consecutive_sums_with<T: Scalar, B: MinPlusBackend>(
    hits: &[T],
    backend: &B,
) -> Result<MaxSumsProfile<T>> {
    if hits.is_empty() {
        return Err(Error::usage("maximum consecutive sums need at least one value"));
    }
    let mut prefix = Vec::with_capacity(hits.len() + 1);
    prefix.push(T::ZERO);
    for (i, &h) in hits.iter().enumerate() {
        let last = *prefix.last().expect("non-empty");
        match last.checked_add(h) {
            Some(next) if h.in_range() && next.in_range() => prefix.push(next),
            _ => return Err(Error::Magnitude { position: i + 1 }),
        }
    }
    let m = hits.len();
    let x = MinPlusVector::from_finite(&prefix);
    let y: MinPlusVector<T> = prefix.iter().rev().map(|&p| crate::minplus::Finite(-p)).collect();
    let z = blocked_convolution_with(&x, &y, backend)?;
    let w = (1..=m)
        .map(|j| {
            let zk = z[m - j].finite().expect("finite operands give finite sums");
            -zk
        })
        .collect();
    Ok(MaxSumsProfile { w })
}

pub fn max_consecutive_sums<T: Scalar>(hits: &[T]) -> Result<MaxSumsProfile<T>> {
    max_consecutive_sums_with(hits, &NaiveBackend)
}

/// A block `[start, end]` of the negative-case schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub end: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `[2kL + 1, min(2kL + 4L, n)]` for `k = 0..=(n - L) / 2L`.
///
/// Every interval with length in `[L, 2L - 1]` lies inside some block.
pub fn blocks(n: usize, min_len: usize) -> Vec<Block> {
    if min_len == 0 || min_len > n {
        return Vec::new();
    }
    (0..=(n - min_len) / (2 * min_len))
        .map(|k| Block {
            start: 2 * k * min_len + 1,
            end: (2 * k * min_len + 4 * min_len).min(n),
        })
        .collect()
}

/// Best interval inside `block` with length in `[L, 2L - 1]`.
///
/// The length is the one maximizing `w_j / √j` (smallest on ties); the
/// start is the one achieving the largest sum at that length (smallest on
/// ties).
pub fn block_best_with<T: Scalar, B: MinPlusBackend>(
    prefix: &PrefixSums<T>,
    block: Block,
    min_len: usize,
    backend: &B,
) -> Result<Scored<T>> {
    if block.start == 0 || block.end > prefix.len() || block.start > block.end {
        return Err(Error::usage(format!("block [{}, {}] out of range", block.start, block.end)));
    }
    if min_len == 0 || block.len() < min_len {
        return Err(Error::usage(format!(
            "block of length {} shorter than the length bound {min_len}",
            block.len()
        )));
    }
    let hits: Vec<T> = (block.start..=block.end).map(|i| prefix.hit(i, i)).collect();
    let profile = max_consecutive_sums_with(&hits, backend)?;

    let mut best_len = min_len;
    for j in min_len + 1..=(2 * min_len - 1).min(block.len()) {
        let order = T::cmp_ecc(
            profile.get(j),
            T::from_usize(j),
            profile.get(best_len),
            T::from_usize(best_len),
        );
        if order == Ordering::Greater {
            best_len = j;
        }
    }

    let mut best_start = block.start;
    for i in block.start + 1..=block.end + 1 - best_len {
        if prefix.hit(i, i + best_len - 1) > prefix.hit(best_start, best_start + best_len - 1) {
            best_start = i;
        }
    }
    Ok(scored_len(
        prefix,
        IndexInterval::new(best_start, best_start + best_len - 1),
    ))
}

pub fn block_best<T: Scalar>(prefix: &PrefixSums<T>, block: Block, min_len: usize) -> Result<Scored<T>> {
    block_best_with(prefix, block, min_len, &NaiveBackend)
}

/// Which branch of the driver produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PseiCase {
    ZeroSum,
    PositiveSum,
    NegativeSum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseiAnswer<T> {
    /// The interval; `support` holds its length.
    pub best: Scored<T>,
    pub case: PseiCase,
}

impl<T: Scalar> PseiAnswer<T> {
    pub fn interval(&self) -> IndexInterval {
        self.best.interval
    }

    pub fn eccentricity(&self) -> f64 {
        self.best.eccentricity()
    }
}

pub fn compute_psei<T: Scalar>(seq: &PairSequence<T>, min_len: usize) -> Result<PseiAnswer<T>> {
    compute_psei_with(seq, min_len, &NaiveBackend)
}

pub fn compute_psei_with<T: Scalar, B: MinPlusBackend>(
    seq: &PairSequence<T>,
    min_len: usize,
    backend: &B,
) -> Result<PseiAnswer<T>> {
    if !seq.is_plain() {
        return Err(Error::usage("eccentricity search needs a plain sequence (all supports 1)"));
    }
    let prefix = seq.prefix_sums();
    let max_sum = max_hit_min_length(&prefix, min_len)?;
    match max_sum.hit.cmp_value(T::ZERO) {
        Ordering::Equal => Ok(PseiAnswer {
            best: max_sum,
            case: PseiCase::ZeroSum,
        }),
        Ordering::Greater => Ok(PseiAnswer {
            best: max_ecc_positive_case(&prefix, min_len)?,
            case: PseiCase::PositiveSum,
        }),
        Ordering::Less => {
            let mut best: Option<Scored<T>> = None;
            for block in blocks(prefix.len(), min_len) {
                let cand = block_best_with(&prefix, block, min_len, backend)?;
                if best.is_none_or(|b| cand.cmp_ecc(&b) == Ordering::Greater) {
                    best = Some(cand);
                }
            }
            Ok(PseiAnswer {
                best: best.expect("at least one block"),
                case: PseiCase::NegativeSum,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_max_sums, brute_psei};
    use proptest::prelude::*;

    fn prefix(hits: &[i64]) -> PrefixSums<i64> {
        PairSequence::from_hits(hits).unwrap().prefix_sums()
    }

    fn iv(a: usize, b: usize) -> IndexInterval {
        IndexInterval::new(a, b)
    }

    #[test]
    fn max_hit_examples() {
        let r = max_hit_min_length(&prefix(&[1, -2, 3]), 2).unwrap();
        assert_eq!((r.interval, r.hit), (iv(1, 3), 2));
        let r = max_hit_min_length(&prefix(&[5]), 1).unwrap();
        assert_eq!((r.interval, r.hit), (iv(1, 1), 5));
        let r = max_hit_min_length(&prefix(&[-1, -2]), 2).unwrap();
        assert_eq!((r.interval, r.hit), (iv(1, 2), -3));
        assert!(max_hit_min_length(&prefix(&[1]), 2).is_err());
        assert!(max_hit_min_length(&prefix(&[1]), 0).is_err());
    }

    #[test]
    fn positive_case_examples() {
        let r = max_ecc_positive_case(&prefix(&[1, -2, 3]), 2).unwrap();
        assert_eq!((r.interval, r.hit, r.support), (iv(1, 3), 2, 3));
        let r = max_ecc_positive_case(&prefix(&[1, 1]), 1).unwrap();
        assert_eq!((r.interval, r.hit), (iv(1, 2), 2));
        let r = max_ecc_positive_case(&prefix(&[5]), 1).unwrap();
        assert_eq!(r.eccentricity(), 5.0);
        assert!(max_ecc_positive_case(&prefix(&[-1, -1]), 1).is_err());
    }

    #[test]
    fn max_sums_examples() {
        assert_eq!(max_consecutive_sums(&[1i64, -2, 3]).unwrap().as_slice(), &[3, 1, 2]);
        assert_eq!(max_consecutive_sums(&[7i64]).unwrap().as_slice(), &[7]);
        assert_eq!(max_consecutive_sums(&[-1i64, -1]).unwrap().as_slice(), &[-1, -2]);
        assert!(max_consecutive_sums::<i64>(&[]).is_err());
    }

    #[test]
    fn block_examples() {
        let p = prefix(&[-1, -5, -1, -1]);
        let r = block_best(&p, Block { start: 1, end: 4 }, 2).unwrap();
        assert_eq!((r.interval, r.hit), (iv(3, 4), -2));

        let p = prefix(&[3, -1, 4]);
        let r = block_best(&p, Block { start: 2, end: 3 }, 2).unwrap();
        assert_eq!(r.interval, iv(2, 3));

        let p = prefix(&[2, 2, 2, 2]);
        let r = block_best(&p, Block { start: 1, end: 4 }, 2).unwrap();
        assert_eq!(r.interval, iv(1, 3));

        assert!(block_best(&p, Block { start: 4, end: 4 }, 2).is_err());
    }

    #[test]
    fn driver_examples() {
        let seq = PairSequence::from_hits(&[0i64, 0]).unwrap();
        let r = compute_psei(&seq, 2).unwrap();
        assert_eq!((r.interval(), r.case, r.eccentricity()), (iv(1, 2), PseiCase::ZeroSum, 0.0));

        let seq = PairSequence::from_hits(&[1i64, -2, 3]).unwrap();
        let r = compute_psei(&seq, 2).unwrap();
        assert_eq!((r.interval(), r.case), (iv(1, 3), PseiCase::PositiveSum));
        assert!((r.eccentricity() - 2.0 / 3f64.sqrt()).abs() < 1e-15);

        let seq = PairSequence::from_hits(&[-1i64, -5, -1, -1]).unwrap();
        let r = compute_psei(&seq, 2).unwrap();
        assert_eq!((r.interval(), r.case), (iv(3, 4), PseiCase::NegativeSum));
        assert!((r.eccentricity() + 2f64.sqrt()).abs() < 1e-15);

        let seq = PairSequence::from_pairs(&[(1i64, 2)]).unwrap();
        assert!(compute_psei(&seq, 1).is_err());
        let seq = PairSequence::from_hits(&[1i64]).unwrap();
        assert!(compute_psei(&seq, 2).is_err());
    }

    #[test]
    fn block_schedule_covers_short_intervals() {
        for n in 1..=200 {
            for l in 1..=n {
                let bs = blocks(n, l);
                assert!(bs.iter().all(|b| b.start + l - 1 <= n && b.end <= n));
                for len in l..=(2 * l - 1).min(n) {
                    for a in 1..=n + 1 - len {
                        let b = a + len - 1;
                        assert!(bs.iter().any(|blk| blk.start <= a && b <= blk.end), "n={n} L={l} [{a},{b}]");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn matches_brute_force(hits in prop::collection::vec(-10i64..=10, 1..40)) {
            let seq = PairSequence::from_hits(&hits).unwrap();
            for l in 1..=hits.len() {
                let got = compute_psei(&seq, l).unwrap();
                let want = brute_psei(&seq, l).unwrap();
                prop_assert_eq!(got.best.cmp_ecc(&want), Ordering::Equal, "L={}", l);
                prop_assert!(got.interval().len() >= l);
            }
        }

        #[test]
        fn negative_drift_matches_brute_force(hits in prop::collection::vec(-12i64..=3, 1..40)) {
            let seq = PairSequence::from_hits(&hits).unwrap();
            for l in 1..=hits.len() {
                let got = compute_psei(&seq, l).unwrap();
                prop_assert_eq!(got.best.cmp_ecc(&brute_psei(&seq, l).unwrap()), Ordering::Equal);
            }
        }

        #[test]
        fn max_sums_match_direct(hits in prop::collection::vec(-100i64..=100, 1..150)) {
            let w = max_consecutive_sums(&hits).unwrap();
            prop_assert_eq!(w.as_slice().to_vec(), brute_max_sums(&hits));
            prop_assert_eq!(w.get(1), *hits.iter().max().unwrap());
            prop_assert_eq!(w.get(hits.len()), hits.iter().sum::<i64>());
        }

        #[test]
        fn scale_equivariance(hits in prop::collection::vec(-10i64..=10, 1..30), lambda in 1i64..=7, l in 1usize..30) {
            let l = l.min(hits.len());
            let seq = PairSequence::from_hits(&hits).unwrap();
            let scaled: Vec<i64> = hits.iter().map(|h| h * lambda).collect();
            let base = compute_psei(&seq, l).unwrap().best;
            let big = compute_psei(&PairSequence::from_hits(&scaled).unwrap(), l).unwrap().best;
            let lifted = Scored { hit: base.hit * lambda, ..base };
            prop_assert_eq!(big.cmp_ecc(&lifted), Ordering::Equal);
        }

        #[test]
        fn float_matches_exact(hits in prop::collection::vec(-10i64..=10, 1..30), l in 1usize..30) {
            let l = l.min(hits.len());
            let exact = compute_psei(&PairSequence::from_hits(&hits).unwrap(), l).unwrap();
            let fh: Vec<f64> = hits.iter().map(|&h| h as f64).collect();
            let float = compute_psei(&PairSequence::from_hits(&fh).unwrap(), l).unwrap();
            let (a, b) = (exact.eccentricity(), float.eccentricity());
            prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
        }
    }
}
