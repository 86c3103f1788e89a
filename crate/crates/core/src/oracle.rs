// SPDX-License-Identifier: MIT OR Apache-2.0

//! Brute-force reference implementations.
//!
//! Each function evaluates its definition literally with direct summation
//! over the raw pairs. Nothing here shares code with the fast solvers apart
//! from the core types and comparators.

use std::cmp::Ordering;

use crate::hci::HciAnswer;
use crate::minplus::{ExtendedValue, MinPlusVector};
use crate::scalar::Scalar;
use crate::sequence::{IndexInterval, PairSequence, Scored};

fn sums<T: Scalar>(seq: &PairSequence<T>, i: usize, j: usize) -> (T, T) {
    seq.pairs()[i - 1..j]
        .iter()
        .fold((T::ZERO, T::ZERO), |(h, s), p| (h + p.h, s + p.s))
}

fn scored<T: Scalar>(seq: &PairSequence<T>, i: usize, j: usize) -> Scored<T> {
    let (hit, support) = sums(seq, i, j);
    Scored {
        interval: IndexInterval::new(i, j),
        hit,
        support,
    }
}

fn all_intervals(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i..=n).map(move |j| (i, j)))
}

/// Every interval with hit-sum at least `lower` and maximum confidence.
pub fn all_optimal_hci<T: Scalar>(seq: &PairSequence<T>, lower: T) -> Vec<Scored<T>> {
    let mut best: Vec<Scored<T>> = Vec::new();
    for (i, j) in all_intervals(seq.len()) {
        let cand = scored(seq, i, j);
        if cand.hit < lower {
            continue;
        }
        match best.first().map(|b| cand.cmp_conf(b)) {
            None | Some(Ordering::Equal) => best.push(cand),
            Some(Ordering::Greater) => best = vec![cand],
            Some(Ordering::Less) => {}
        }
    }
    best
}

pub fn brute_hci<T: Scalar>(seq: &PairSequence<T>, lower: T) -> HciAnswer<T> {
    HciAnswer {
        best: all_optimal_hci(seq, lower).into_iter().next(),
    }
}

/// Maximum confidence under a support cap.
pub fn brute_conf_capped<T: Scalar>(seq: &PairSequence<T>, cap: T) -> HciAnswer<T> {
    let mut best: Option<Scored<T>> = None;
    for (i, j) in all_intervals(seq.len()) {
        let cand = scored(seq, i, j);
        if cand.support > cap {
            continue;
        }
        if best.is_none_or(|b| cand.cmp_conf(&b) == Ordering::Greater) {
            best = Some(cand);
        }
    }
    HciAnswer { best }
}

/// Every interval of length at least `min_len` with maximum eccentricity.
pub fn all_optimal_psei<T: Scalar>(seq: &PairSequence<T>, min_len: usize) -> Vec<Scored<T>> {
    let mut best: Vec<Scored<T>> = Vec::new();
    for (i, j) in all_intervals(seq.len()) {
        if j - i + 1 < min_len {
            continue;
        }
        let cand = scored(seq, i, j);
        match best.first().map(|b| cand.cmp_ecc(b)) {
            None | Some(Ordering::Equal) => best.push(cand),
            Some(Ordering::Greater) => best = vec![cand],
            Some(Ordering::Less) => {}
        }
    }
    best
}

/// Maximum eccentricity over intervals of length at least `min_len`;
/// `None` when `min_len > n`.
pub fn brute_psei<T: Scalar>(seq: &PairSequence<T>, min_len: usize) -> Option<Scored<T>> {
    all_optimal_psei(seq, min_len).into_iter().next()
}

/// `R[1..n]` with `-1` for bad indices, by scanning every `(p, q)`.
pub fn brute_rmp<T: Scalar>(seq: &PairSequence<T>, lower: T) -> Vec<i64> {
    let n = seq.len();
    let rightmost: Vec<usize> = (1..=n)
        .map(|q| {
            (1..=q)
                .rev()
                .find(|&p| sums(seq, p, q).0 >= lower)
                .unwrap_or(0)
        })
        .collect();
    let mut ideal = 0;
    rightmost
        .iter()
        .map(|&r| {
            ideal = ideal.max(r);
            if r == ideal {
                r as i64
            } else {
                -1
            }
        })
        .collect()
}

/// Largest `z` in `[x, y]` minimizing `conf(x, z)`.
pub fn brute_phi<T: Scalar>(seq: &PairSequence<T>, x: usize, y: usize) -> usize {
    let mut best = x;
    for z in x..=y {
        if scored(seq, x, z).cmp_conf(&scored(seq, x, best)) != Ordering::Greater {
            best = z;
        }
    }
    best
}

/// Largest `p` in `[max(l, 1), u]` maximizing `conf(p, q)`; 0 when `u` is 0.
pub fn brute_best<T: Scalar>(seq: &PairSequence<T>, l: usize, u: usize, q: usize) -> usize {
    if u == 0 {
        return 0;
    }
    let mut best = l.max(1);
    for p in l.max(1)..=u {
        if scored(seq, p, q).cmp_conf(&scored(seq, best, q)) != Ordering::Less {
            best = p;
        }
    }
    best
}

fn ext_min<T: Scalar>(a: ExtendedValue<T>, b: ExtendedValue<T>) -> ExtendedValue<T> {
    match (a, b) {
        (ExtendedValue::Top, v) | (v, ExtendedValue::Top) => v,
        (ExtendedValue::Finite(x), ExtendedValue::Finite(y)) => {
            ExtendedValue::Finite(if y.cmp_value(x) == Ordering::Less { y } else { x })
        }
    }
}

/// `z_k = min_{i <= k} x_i + y_{k-i}`, evaluated term by term.
///
/// # Panics
///
/// If the lengths differ.
pub fn brute_convolution<T: Scalar>(x: &MinPlusVector<T>, y: &MinPlusVector<T>) -> MinPlusVector<T> {
    assert_eq!(x.len(), y.len(), "convolution operands differ in length");
    let z = (0..x.len())
        .map(|k| {
            (0..=k).fold(ExtendedValue::Top, |acc, i| {
                let term = match (x[i], y[k - i]) {
                    (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::Finite(a + b),
                    _ => ExtendedValue::Top,
                };
                ext_min(acc, term)
            })
        })
        .collect();
    MinPlusVector::new(z)
}

/// `w_j` = largest sum over windows of exactly `j` consecutive values.
pub fn brute_max_sums<T: Scalar>(hits: &[T]) -> Vec<T> {
    let m = hits.len();
    (1..=m)
        .map(|len| {
            (0..=m - len)
                .map(|start| hits[start..start + len].iter().fold(T::ZERO, |a, &b| a + b))
                .reduce(|a, b| if b.cmp_value(a) == Ordering::Greater { b } else { a })
                .expect("at least one window")
        })
        .collect()
}
