// SPDX-License-Identifier: MIT OR Apache-2.0

//! Rightmost partners.
//!
//! `p` in `1..=q` is a partner of `q` when `hit(p, q) >= L_h`; position 0 is
//! a partner of every `q`. `r_q` is the largest partner and `q` is good when
//! `r_q` equals the running maximum of `r_1..r_q`. Only good indices can
//! end a maximum-confidence endorsed interval.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::PrefixSums;

/// `R[1..n]`: `Some(r_q)` for good indices, `None` for bad ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmpResult {
    partners: Vec<Option<usize>>,
}

impl RmpResult {
    pub fn len(&self) -> usize {
        self.partners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partners.is_empty()
    }

    /// `R[q]` for 1-based `q`.
    pub fn get(&self, q: usize) -> Option<usize> {
        self.partners[q - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.partners.iter().copied()
    }

    /// The array with `-1` marking bad indices.
    pub fn to_signed(&self) -> Vec<i64> {
        self.partners
            .iter()
            .map(|r| r.map_or(-1, |v| v as i64))
            .collect()
    }
}

/// Candidate partners for future right endpoints.
///
/// Candidates are kept in increasing position order with strictly
/// increasing `P_H[c - 1]`, so the front candidate has the largest hit-sum
/// to any right endpoint.
#[derive(Debug, Clone, Default)]
pub(crate) struct PartnerDeque {
    candidates: VecDeque<usize>,
    rhat: usize,
}

impl PartnerDeque {
    /// Processes position `i` (after `prefix` covers it) and returns `R[i]`.
    pub(crate) fn advance<T: Scalar>(
        &mut self,
        prefix: &PrefixSums<T>,
        i: usize,
        lower: T,
    ) -> Option<usize> {
        let boundary = prefix.boundary_hit(i - 1);
        while let Some(&last) = self.candidates.back() {
            if prefix.boundary_hit(last - 1) >= boundary {
                self.candidates.pop_back();
            } else {
                break;
            }
        }
        self.candidates.push_back(i);

        let rhat_reaches = self.rhat == 0 || prefix.hit(self.rhat, i) >= lower;
        let front_reaches = prefix.hit(self.candidates[0], i) >= lower;
        if !(rhat_reaches || front_reaches) {
            return None;
        }
        while let Some(&first) = self.candidates.front() {
            if prefix.hit(first, i) >= lower {
                self.rhat = first;
                self.candidates.pop_front();
            } else {
                break;
            }
        }
        Some(self.rhat)
    }
}

/// Computes `R` in O(n): each position enters and leaves the deque once.
pub fn compute_rmp<T: Scalar>(prefix: &PrefixSums<T>, lower: T) -> Result<RmpResult> {
    if lower < T::ZERO {
        return Err(Error::usage(
            "hit lower bound must be non-negative here; normalize negative bounds first",
        ));
    }
    let mut deque = PartnerDeque::default();
    let partners = (1..=prefix.len())
        .map(|i| deque.advance(prefix, i, lower))
        .collect();
    Ok(RmpResult { partners })
}
