// SPDX-License-Identifier: MIT OR Apache-2.0

use crate::error::{Error, Result};
use crate::hci::HciAnswer;
use crate::scalar::Scalar;
use crate::sequence::{IndexInterval, PairSequence};

/// Maximum confidence among intervals with `sup(i, j) <= cap`.
///
/// Scans, for every start, the ends that keep the support under the cap,
/// so the cost is `O(n * w)` with `w` the widest feasible window. Ties keep
/// the first interval found (smallest start, then smallest end).
pub fn max_conf_support_capped<T: Scalar>(seq: &PairSequence<T>, cap: T) -> Result<HciAnswer<T>> {
    if cap <= T::ZERO {
        return Err(Error::usage("support cap must be positive"));
    }
    let prefix = seq.prefix_sums();
    let n = prefix.len();
    let mut answer = HciAnswer::none();
    for i in 1..=n {
        for j in i..=n {
            if prefix.sup(i, j) > cap {
                break;
            }
            answer.offer(prefix.scored(IndexInterval::new(i, j)));
        }
    }
    Ok(answer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_conf_capped;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    #[test]
    fn examples() {
        let seq = PairSequence::from_pairs(&[(1i64, 2), (3, 1)]).unwrap();
        let ans = max_conf_support_capped(&seq, 1).unwrap();
        assert_eq!(ans.interval(), Some(IndexInterval::new(2, 2)));
        assert_eq!(ans.confidence(), 3.0);

        let seq = PairSequence::from_pairs(&[(4i64, 3), (3, 2)]).unwrap();
        assert_eq!(max_conf_support_capped(&seq, 1).unwrap().best, None);

        let seq = PairSequence::from_pairs(&[(1i64, 1), (1, 1)]).unwrap();
        assert_eq!(max_conf_support_capped(&seq, 2).unwrap().confidence(), 1.0);

        assert!(max_conf_support_capped(&seq, 0).is_err());
    }

    proptest! {
        #[test]
        fn matches_brute_force(raw in prop::collection::vec((-10i64..=10, 1i64..=5), 0..40), cap in 1i64..=30) {
            let seq = PairSequence::from_pairs(&raw).unwrap();
            let got = max_conf_support_capped(&seq, cap).unwrap();
            prop_assert_eq!(got.cmp_value(&brute_conf_capped(&seq, cap)), Ordering::Equal);
        }
    }
}
