// SPDX-License-Identifier: MIT OR Apache-2.0

//! Best-partner search.
//!
//! For a right endpoint `q` and a window `[l, u]` of admissible left
//! endpoints, BEST returns the largest `p` maximizing `conf(p, q)`. With
//! boundary points `B_t = (P_S[t], P_H[t])`, `conf(p, q)` is the slope from
//! `B_{p-1}` to `B_q`, and `phi(p, u - 1)` is the successor of `B_{p-1}` on
//! the lower convex hull of `B_{p-1}, ..., B_{u-1}`. The loop
//!
//! ```text
//! while p < u and conf(p, phi(p, u - 1)) <= conf(p, q):
//!     p = phi(p, u - 1) + 1
//! ```
//!
//! therefore walks that hull from its left end. [`BestSession`] keeps the
//! hull in a deque: new boundaries join at the back as `u` grows and
//! vertices walked past are dropped from the front, so a run of calls with
//! non-decreasing `u` costs `O(u_k + k)` in total. [`best_by_scan`] runs the
//! same loop with a direct scan for `phi`.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::PrefixSums;

/// The largest `z` in `[x, y]` minimizing `conf(x, z)`.
pub fn phi<T: Scalar>(prefix: &PrefixSums<T>, x: usize, y: usize) -> Result<usize> {
    if x == 0 || x > y || y > prefix.len() {
        return Err(Error::usage(format!(
            "phi range [{x}, {y}] outside 1..={}",
            prefix.len()
        )));
    }
    Ok(phi_unchecked(prefix, x, y))
}

fn phi_unchecked<T: Scalar>(prefix: &PrefixSums<T>, x: usize, y: usize) -> usize {
    let mut best = x;
    for z in x + 1..=y {
        let order = T::cmp_conf(
            prefix.hit(x, z),
            prefix.sup(x, z),
            prefix.hit(x, best),
            prefix.sup(x, best),
        );
        if order != Ordering::Greater {
            best = z;
        }
    }
    best
}

/// Literal BEST loop with a scanning `phi`, starting at `max(l, 1)`.
///
/// Returns 0 when `u` is 0. Superlinear in the worst case; used to
/// cross-check [`BestSession`].
pub fn best_by_scan<T: Scalar>(
    prefix: &PrefixSums<T>,
    l: usize,
    u: usize,
    q: usize,
) -> Result<usize> {
    check_window(prefix, l, u, q)?;
    if u == 0 {
        return Ok(0);
    }
    let mut p = l.max(1);
    while p < u {
        let z = phi_unchecked(prefix, p, u - 1);
        let order = T::cmp_conf(
            prefix.hit(p, z),
            prefix.sup(p, z),
            prefix.hit(p, q),
            prefix.sup(p, q),
        );
        if order == Ordering::Greater {
            break;
        }
        p = z + 1;
    }
    Ok(p)
}

fn check_window<T: Scalar>(prefix: &PrefixSums<T>, l: usize, u: usize, q: usize) -> Result<()> {
    if l > u || u > q || q > prefix.len() {
        return Err(Error::usage(format!(
            "BEST requires l <= u <= q <= n, got l={l}, u={u}, q={q}, n={}",
            prefix.len()
        )));
    }
    Ok(())
}

/// State for a run of BEST calls with non-decreasing upper limits, where
/// each call starts from the previous answer.
///
/// The session does not own the prefix sums; every call must pass the same
/// (possibly extended) [`PrefixSums`].
#[derive(Debug, Clone, Default)]
pub struct BestSession {
    left: usize,
    upper: usize,
    next_boundary: usize,
    hull: VecDeque<usize>,
}

impl BestSession {
    pub fn new() -> Self {
        Self::default()
    }

    /// A session whose first call searches from `left`.
    pub fn starting_at(left: usize) -> Self {
        BestSession {
            left,
            upper: left,
            next_boundary: left.saturating_sub(1),
            hull: VecDeque::new(),
        }
    }

    /// The current left pointer (the previous answer).
    pub fn left(&self) -> usize {
        self.left
    }

    /// BEST(l, u, q) with `l` the session's left pointer.
    pub fn step<T: Scalar>(&mut self, prefix: &PrefixSums<T>, u: usize, q: usize) -> Result<usize> {
        if u < self.upper {
            return Err(Error::usage(format!(
                "BEST upper limits must be non-decreasing: {u} after {}",
                self.upper
            )));
        }
        check_window(prefix, self.left, u, q)?;
        self.upper = u;
        if u == 0 {
            return Ok(0);
        }
        while self.next_boundary < u {
            self.push_boundary(prefix, self.next_boundary);
            self.next_boundary += 1;
        }
        while self.hull.len() >= 2 {
            let (a, b) = (self.hull[0], self.hull[1]);
            let order = T::cmp_conf(
                prefix.span_hit(a, b),
                prefix.span_sup(a, b),
                prefix.span_hit(a, q),
                prefix.span_sup(a, q),
            );
            if order == Ordering::Greater {
                break;
            }
            self.hull.pop_front();
        }
        self.left = self.hull[0] + 1;
        Ok(self.left)
    }

    fn push_boundary<T: Scalar>(&mut self, prefix: &PrefixSums<T>, t: usize) {
        while self.hull.len() >= 2 {
            let b = self.hull[self.hull.len() - 1];
            let a = self.hull[self.hull.len() - 2];
            let order = T::cmp_conf(
                prefix.span_hit(a, b),
                prefix.span_sup(a, b),
                prefix.span_hit(b, t),
                prefix.span_sup(b, t),
            );
            if order == Ordering::Less {
                break;
            }
            self.hull.pop_back();
        }
        self.hull.push_back(t);
    }
}
