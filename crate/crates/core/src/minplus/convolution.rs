// SPDX-License-Identifier: MIT OR Apache-2.0

use crate::error::{Error, Result};
use crate::minplus::{
    add_in_range, rect_min_plus_product, Finite, MinPlusBackend, MinPlusMatrix,
    MinPlusVector, NaiveBackend, Top,
};
use crate::scalar::Scalar;

fn check_operands<T: Scalar>(x: &MinPlusVector<T>, y: &MinPlusVector<T>) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::usage(format!(
            "convolution operands differ in length: {} and {}",
            x.len(),
            y.len()
        )));
    }
    if x.is_empty() {
        return Err(Error::usage("convolution operands must be non-empty"));
    }
    x.check_addable("x")?;
    y.check_addable("y")?;
    Ok(x.len())
}

/// `z_k = min_{0 <= i <= k} x_i + y_{k-i}` in O(n²).
pub fn naive_convolution<T: Scalar>(x: &MinPlusVector<T>, y: &MinPlusVector<T>) -> Result<MinPlusVector<T>> {
    let n = check_operands(x, y)?;
    let mut z = vec![Top; n];
    for (i, &xi) in x.iter().enumerate() {
        let Finite(xi) = xi else { continue };
        for (slot, &yj) in z[i..].iter_mut().zip(y.iter()) {
            if let Finite(yj) = yj {
                *slot = slot.min(Finite(add_in_range(xi, yj)));
            }
        }
    }
    Ok(MinPlusVector::new(z))
}

/// `d = ceil(sqrt(n))`, the block width of the blocked convolution.
pub fn block_width(n: usize) -> usize {
    let mut d = (n as f64).sqrt() as usize;
    while d * d < n {
        d += 1;
    }
    while d > 1 && (d - 1) * (d - 1) >= n {
        d -= 1;
    }
    d.max(1)
}

/// The operands of the blocked convolution.
///
/// With `d = ceil(sqrt(n))` and `r = ceil(n / d)`: row `i` of the `r x (2n-1)`
/// matrix `B` is `n-1-i*d` tops, then `x_0..x_{n-1}`, then `i*d` tops;
/// column `j` of the `(2n-1) x d` matrix `C` is `j` tops, then
/// `y_{n-1}..y_0`, then `n-1-j` tops. Entry `(i, j)` of `B C` is then
/// `z_{i*d+j}` whenever `i*d + j < n`.
pub fn build_block_matrices<T: Scalar>(
    x: &MinPlusVector<T>,
    y: &MinPlusVector<T>,
) -> Result<(MinPlusMatrix<T>, MinPlusMatrix<T>)> {
    let n = check_operands(x, y)?;
    let d = block_width(n);
    let r = n.div_ceil(d);
    let inner = 2 * n - 1;

    let mut b = MinPlusMatrix::filled(r, inner, Top);
    for i in 0..r {
        let lead = n - 1 - i * d;
        for (t, &v) in x.iter().enumerate() {
            b.set(i, lead + t, v);
        }
    }
    let mut c = MinPlusMatrix::filled(inner, d, Top);
    for j in 0..d {
        for (t, &v) in y.iter().rev().enumerate() {
            c.set(j + t, j, v);
        }
    }
    Ok((b, c))
}

/// Min-plus convolution through one rectangular min-plus product.
pub fn blocked_convolution_with<T: Scalar, B: MinPlusBackend>(
    x: &MinPlusVector<T>,
    y: &MinPlusVector<T>,
    backend: &B,
) -> Result<MinPlusVector<T>> {
    let (b, c) = build_block_matrices(x, y)?;
    let d = c.cols();
    let product = rect_min_plus_product(&b, &c, backend)?;
    Ok((0..x.len()).map(|k| product.get(k / d, k % d)).collect())
}

/// [`blocked_convolution_with`] on the naive backend.
pub fn blocked_convolution<T: Scalar>(x: &MinPlusVector<T>, y: &MinPlusVector<T>) -> Result<MinPlusVector<T>> {
    blocked_convolution_with(x, y, &NaiveBackend)
}
