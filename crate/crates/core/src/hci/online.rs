// SPDX-License-Identifier: MIT OR Apache-2.0

use crate::error::{Error, Result};
use crate::hci::best::BestSession;
use crate::hci::rmp::PartnerDeque;
use crate::hci::HciAnswer;
use crate::scalar::Scalar;
use crate::sequence::{IndexInterval, NumberPair, PrefixSums};

/// Streaming solver: after each pushed pair the answer covers the prefix
/// seen so far, with amortized O(1) work per pair.
///
/// Only non-negative bounds are supported, because a negative bound over a
/// prefix of all-negative hits needs the support-capped reduction.
#[derive(Debug, Clone)]
pub struct HciStream<T> {
    lower: T,
    prefix: PrefixSums<T>,
    partners: PartnerDeque,
    session: BestSession,
    answer: HciAnswer<T>,
}

impl<T: Scalar> HciStream<T> {
    pub fn new(lower: T) -> Result<Self> {
        if lower < T::ZERO || !lower.is_finite() {
            return Err(Error::usage(
                "streaming requires a finite non-negative hit lower bound; use the offline solver",
            ));
        }
        Ok(HciStream {
            lower,
            prefix: PrefixSums::default(),
            partners: PartnerDeque::default(),
            session: BestSession::new(),
            answer: HciAnswer::none(),
        })
    }

    /// Number of pairs consumed.
    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn answer(&self) -> HciAnswer<T> {
        self.answer
    }

    /// Consumes one pair and returns the answer for the extended prefix.
    /// An invalid pair is rejected without changing the state.
    pub fn push(&mut self, pair: NumberPair<T>) -> Result<HciAnswer<T>> {
        self.prefix.push(pair)?;
        let q = self.prefix.len();
        if let Some(upper) = self.partners.advance(&self.prefix, q, self.lower) {
            let left = self.session.step(&self.prefix, upper, q)?;
            if left != 0 {
                self.answer.offer(self.prefix.scored(IndexInterval::new(left, q)));
            }
        }
        Ok(self.answer)
    }
}
