// SPDX-License-Identifier: MIT OR Apache-2.0

use crate::error::{Error, Result};
use crate::minplus::{add_in_range, ExtendedValue, Finite, Top};
use crate::scalar::Scalar;

/// A dense row-major matrix over the (min, +) semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct MinPlusMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<ExtendedValue<T>>,
}

impl<T: Scalar> MinPlusMatrix<T> {
    pub fn filled(rows: usize, cols: usize, value: ExtendedValue<T>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        MinPlusMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Zero diagonal, `Top` elsewhere.
    pub fn identity(d: usize) -> Self {
        let mut m = Self::filled(d, d, Top);
        for i in 0..d {
            m.set(i, i, Finite(T::ZERO));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExtendedValue<T>>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::usage("matrix rows must be non-empty and of equal length"));
        }
        Ok(MinPlusMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_finite_rows(rows: &[&[T]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Finite(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> ExtendedValue<T> {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: ExtendedValue<T>) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[ExtendedValue<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn check_addable(&self) -> Result<()> {
        if self.data.iter().all(ExtendedValue::addable) {
            Ok(())
        } else {
            Err(Error::Overflow(
                "matrix entry too large for exact addition".into(),
            ))
        }
    }

    /// Direct triple loop for any compatible shapes.
    fn product_direct(&self, other: &Self) -> Self {
        let mut out = Self::filled(self.rows, other.cols, Top);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &b) in self.row(i).iter().enumerate() {
                let Finite(b) = b else { continue };
                for (slot, &c) in out_row.iter_mut().zip(other.row(k)) {
                    if let Finite(c) = c {
                        let cand = add_in_range(b, c);
                        match slot {
                            Finite(v) if *v <= cand => {}
                            _ => *slot = Finite(cand),
                        }
                    }
                }
            }
        }
        out
    }
}

/// Computes products of square matrices of equal size.
///
/// This is the `T(d)` hook: rectangular products and the blocked
/// convolution only ever call the backend on `d x d` operands.
pub trait MinPlusBackend {
    fn square_product<T: Scalar>(
        &self,
        b: &MinPlusMatrix<T>,
        c: &MinPlusMatrix<T>,
    ) -> Result<MinPlusMatrix<T>>;
}

/// The cubic triple loop.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaiveBackend;

impl MinPlusBackend for NaiveBackend {
    fn square_product<T: Scalar>(
        &self,
        b: &MinPlusMatrix<T>,
        c: &MinPlusMatrix<T>,
    ) -> Result<MinPlusMatrix<T>> {
        square_min_plus_product(b, c)
    }
}

/// `D = B C` for square `B`, `C` of equal size with the naive backend.
pub fn square_min_plus_product<T: Scalar>(
    b: &MinPlusMatrix<T>,
    c: &MinPlusMatrix<T>,
) -> Result<MinPlusMatrix<T>> {
    if b.rows != b.cols || c.rows != c.cols || b.rows != c.rows {
        return Err(Error::usage(format!(
            "square product needs equal square operands, got {}x{} and {}x{}",
            b.rows, b.cols, c.rows, c.cols
        )));
    }
    b.check_addable()?;
    c.check_addable()?;
    Ok(b.product_direct(c))
}

/// `B C` for `B: r x m`, `C: m x k` via square products of size
/// `d = max(r, k)`.
///
/// The inner dimension is cut into `ceil(m / d)` chunks; each chunk pair is
/// padded with `Top` to `d x d`, multiplied by the backend, and the chunk
/// results are combined entrywise by `min` in chunk order.
pub fn rect_min_plus_product<T: Scalar, B: MinPlusBackend>(
    b: &MinPlusMatrix<T>,
    c: &MinPlusMatrix<T>,
    backend: &B,
) -> Result<MinPlusMatrix<T>> {
    if b.cols != c.rows {
        return Err(Error::usage(format!(
            "inner dimensions differ: {}x{} times {}x{}",
            b.rows, b.cols, c.rows, c.cols
        )));
    }
    b.check_addable()?;
    c.check_addable()?;
    let (r, m, k) = (b.rows, b.cols, c.cols);
    let d = r.max(k);
    let mut out = MinPlusMatrix::filled(r, k, Top);
    let mut b_chunk = MinPlusMatrix::filled(d, d, Top);
    let mut c_chunk = MinPlusMatrix::filled(d, d, Top);
    for start in (0..m).step_by(d) {
        let width = d.min(m - start);
        for i in 0..d {
            for t in 0..d {
                let bv = if i < r && t < width { b.get(i, start + t) } else { Top };
                b_chunk.set(i, t, bv);
                let cv = if i < width && t < k { c.get(start + i, t) } else { Top };
                c_chunk.set(i, t, cv);
            }
        }
        let part = backend.square_product(&b_chunk, &c_chunk)?;
        for i in 0..r {
            for j in 0..k {
                out.set(i, j, out.get(i, j).min(part.get(i, j)));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn direct<T: Scalar>(b: &MinPlusMatrix<T>, c: &MinPlusMatrix<T>) -> MinPlusMatrix<T> {
        let mut out = MinPlusMatrix::filled(b.rows(), c.cols(), Top);
        for i in 0..b.rows() {
            for j in 0..c.cols() {
                let mut acc = Top;
                for t in 0..b.cols() {
                    if let (Finite(x), Finite(y)) = (b.get(i, t), c.get(t, j)) {
                        acc = acc.min(Finite(x + y));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MinPlusMatrix<i64>> {
        prop::collection::vec(prop_oneof![4 => (-100i64..=100).prop_map(Finite), 1 => Just(Top)], rows * cols)
            .prop_map(move |data| MinPlusMatrix { rows, cols, data })
    }

    #[test]
    fn square_examples() {
        let b = MinPlusMatrix::from_finite_rows(&[&[1i64, 2], &[3, 4]]).unwrap();
        let c = MinPlusMatrix::from_finite_rows(&[&[5i64, 6], &[7, 8]]).unwrap();
        let want = MinPlusMatrix::from_finite_rows(&[&[6i64, 7], &[8, 9]]).unwrap();
        assert_eq!(square_min_plus_product(&b, &c).unwrap(), want);
        assert_eq!(square_min_plus_product(&MinPlusMatrix::identity(2), &c).unwrap(), c);
        let top = MinPlusMatrix::filled(2, 2, Top);
        assert_eq!(square_min_plus_product(&b, &top).unwrap(), top);
        assert!(square_min_plus_product(&b, &MinPlusMatrix::identity(3)).is_err());
    }

    #[test]
    fn rect_examples() {
        let b = MinPlusMatrix::from_finite_rows(&[&[1i64, 2, 3]]).unwrap();
        let c = MinPlusMatrix::from_finite_rows(&[&[4i64], &[5], &[6]]).unwrap();
        let out = rect_min_plus_product(&b, &c, &NaiveBackend).unwrap();
        assert_eq!(out.get(0, 0), Finite(5));
        assert!(rect_min_plus_product(&b, &b, &NaiveBackend).is_err());

        let big = MinPlusMatrix::filled(1, 1, Finite(i64::MAX));
        assert!(rect_min_plus_product(&big, &big, &NaiveBackend).is_err());
    }

    proptest! {
        #[test]
        fn rect_matches_direct((b, c) in (1usize..6, 1usize..12, 1usize..6)
                                   .prop_flat_map(|(r, m, k)| (matrix(r, m), matrix(m, k)))) {
            prop_assert_eq!(rect_min_plus_product(&b, &c, &NaiveBackend).unwrap(), direct(&b, &c));
        }

        #[test]
        fn square_associative(a in matrix(3, 3), b in matrix(3, 3), c in matrix(3, 3)) {
            let ab_c = square_min_plus_product(&square_min_plus_product(&a, &b).unwrap(), &c).unwrap();
            let a_bc = square_min_plus_product(&a, &square_min_plus_product(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }
    }
}
