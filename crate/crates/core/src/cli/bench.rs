// SPDX-License-Identifier: MIT OR Apache-2.0

//! Seeded timing harness for the fast paths, run sequentially.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hci::compute_hci;
use crate::minplus::{blocked_convolution, MinPlusVector};
use crate::psei::compute_psei;
use crate::sequence::PairSequence;

pub const BENCH_SEED: u64 = 0x5eed_c0de;

/// Largest operand length timed for convolution; the naive backend is
/// quadratic there.
pub const CONVOLVE_CAP: usize = 4096;

/// The instance timed at `size`: pairs with `h` in `[-10, 10]` and `s` in
/// `[1, 5]`, plus a plain sequence with the same hit values.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchInstance {
    pub pairs: PairSequence<i64>,
    pub plain: PairSequence<i64>,
}

pub fn bench_instance(size: usize, seed: u64) -> BenchInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ size as u64);
    let raw: Vec<(i64, i64)> = (0..size)
        .map(|_| (rng.gen_range(-10..=10), rng.gen_range(1..=5)))
        .collect();
    let hits: Vec<i64> = raw.iter().map(|p| p.0).collect();
    BenchInstance {
        pairs: PairSequence::from_pairs(&raw).expect("small values"),
        plain: PairSequence::from_hits(&hits).expect("small values"),
    }
}

fn seconds(f: impl FnOnce()) -> f64 {
    let start = Instant::now();
    f();
    start.elapsed().as_secs_f64()
}

/// Writes `size,subcommand,seconds` rows, three per size.
pub fn run_bench(sizes: &[usize], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "size,subcommand,seconds")?;
    for &size in sizes {
        let inst = bench_instance(size, BENCH_SEED);
        let lower = 10;
        let min_len = (size / 100).clamp(1, 512);

        let t = seconds(|| {
            compute_hci(&inst.pairs, lower).expect("valid instance");
        });
        writeln!(out, "{size},hci,{t:.6}")?;

        let t = seconds(|| {
            compute_psei(&inst.plain, min_len).expect("valid instance");
        });
        writeln!(out, "{size},psei,{t:.6}")?;

        let n = size.min(CONVOLVE_CAP);
        let hits: Vec<i64> = inst.plain.hits().collect();
        let x = MinPlusVector::from_finite(&hits[..n]);
        let y = MinPlusVector::from_finite(&hits[size - n..]);
        let t = seconds(|| {
            blocked_convolution(&x, &y).expect("valid instance");
        });
        writeln!(out, "{n},convolve,{t:.6}")?;
    }
    Ok(())
}
