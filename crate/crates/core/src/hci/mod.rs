// SPDX-License-Identifier: MIT OR Apache-2.0

//! Hit-constrained maximum-confidence intervals.
//!
//! Given pairs `(h_i, s_i)` and a lower bound `L_h`, find `[i, j]` with
//! `hit(i, j) >= L_h` maximizing `conf(i, j) = hit(i, j) / sup(i, j)`.
//!
//! For `L_h >= 0` the offline solver runs in O(n): rightmost partners
//! ([`compute_rmp`]) restrict each right endpoint to a window of left
//! endpoints, and a single [`BestSession`] sweeps those windows. Negative
//! bounds are normalized first ([`normalize_negative_lh`]).

mod best;
mod capped;
mod online;
mod rmp;

pub use best::{best_by_scan, phi, BestSession};
pub use capped::max_conf_support_capped;
pub use online::HciStream;
pub use rmp::{compute_rmp, RmpResult};

use std::cmp::Ordering;

use crate::error::Result;
use crate::scalar::Scalar;
use crate::sequence::{IndexInterval, NumberPair, PairSequence, PrefixSums, Scored};

/// A maximum-confidence interval, or `None` when no interval qualifies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HciAnswer<T> {
    pub best: Option<Scored<T>>,
}

impl<T: Scalar> HciAnswer<T> {
    pub fn none() -> Self {
        HciAnswer { best: None }
    }

    pub fn interval(&self) -> Option<IndexInterval> {
        self.best.map(|b| b.interval)
    }

    /// The confidence, `-inf` when absent.
    pub fn confidence(&self) -> f64 {
        self.best.map_or(f64::NEG_INFINITY, |b| b.confidence())
    }

    /// Orders two answers by confidence, with absence below everything.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (&self.best, &other.best) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp_conf(b),
        }
    }

    /// Keeps `candidate` only if it is strictly better.
    pub(crate) fn offer(&mut self, candidate: Scored<T>) {
        let better = match &self.best {
            None => true,
            Some(current) => candidate.cmp_conf(current) == Ordering::Greater,
        };
        if better {
            self.best = Some(candidate);
        }
    }
}

/// How a hit lower bound is handled before solving.
#[derive(Debug, Clone, PartialEq)]
pub enum LhStrategy<T> {
    /// The bound is already non-negative.
    Unchanged(T),
    /// The bound is negative but some hit is non-negative; solving with 0
    /// gives the same optimum.
    ResetToZero,
    /// All hits are negative: maximize confidence over `(s_i, -h_i)` under
    /// the support cap `-L_h`. Interval positions carry over unchanged.
    Reduced {
        sequence: PairSequence<T>,
        support_cap: T,
    },
}

pub fn normalize_negative_lh<T: Scalar>(seq: &PairSequence<T>, lower: T) -> Result<LhStrategy<T>> {
    if lower >= T::ZERO {
        return Ok(LhStrategy::Unchanged(lower));
    }
    if seq.hits().any(|h| h >= T::ZERO) {
        return Ok(LhStrategy::ResetToZero);
    }
    let swapped = seq
        .pairs()
        .iter()
        .map(|p| NumberPair::new(p.s, -p.h))
        .collect();
    Ok(LhStrategy::Reduced {
        sequence: PairSequence::new(swapped)?,
        support_cap: -lower,
    })
}

/// Offline solver for any `L_h`.
///
/// Among optimal intervals the one with the earliest right endpoint is
/// returned, with the largest optimal left endpoint for it.
pub fn compute_hci<T: Scalar>(seq: &PairSequence<T>, lower: T) -> Result<HciAnswer<T>> {
    let prefix = seq.prefix_sums();
    match normalize_negative_lh(seq, lower)? {
        LhStrategy::Unchanged(lower) => solve_nonnegative(&prefix, lower),
        LhStrategy::ResetToZero => solve_nonnegative(&prefix, T::ZERO),
        LhStrategy::Reduced {
            sequence,
            support_cap,
        } => {
            let reduced = max_conf_support_capped(&sequence, support_cap)?;
            Ok(HciAnswer {
                best: reduced.best.map(|b| prefix.scored(b.interval)),
            })
        }
    }
}

fn solve_nonnegative<T: Scalar>(prefix: &PrefixSums<T>, lower: T) -> Result<HciAnswer<T>> {
    let rmp = compute_rmp(prefix, lower)?;
    let mut session = BestSession::new();
    let mut answer = HciAnswer::none();
    for (q, partner) in (1..=prefix.len()).zip(rmp.iter()) {
        let Some(upper) = partner else { continue };
        let left = session.step(prefix, upper, q)?;
        if left == 0 {
            continue;
        }
        debug_assert!(prefix.hit(left, q) >= lower);
        answer.offer(prefix.scored(IndexInterval::new(left, q)));
    }
    Ok(answer)
}
