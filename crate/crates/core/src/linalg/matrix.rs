//! Dense matrices over `F_p`.
//!
//! Row-vector convention throughout: a vector is a row, a linear map
//! `V -> W` with `dim V = n`, `dim W = m` is an `n x m` matrix acting on the
//! right (`v . M`), and the composite "first `f`, then `g`" is `F . G`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    /// Invertible matrix with `reduced = transform . m`.
    pub transform: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data; entries must already be reduced.
    pub fn from_vec(field: Fp, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Fp, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Reduces signed integer entries mod `p`.
    pub fn from_ints(field: Fp, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Scalar> = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols);
                r.iter().map(|&x| field.reduce(x))
            })
            .collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn row_vector(field: Fp, v: &[Scalar]) -> Self {
        Matrix::from_vec(field, 1, v.len(), v.to_vec())
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Scalar] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "product of {}x{} and {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(rhs.row(k)) {
                    *slot += a as u64 * b as u64;
                }
                // keep the accumulator far from overflow
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|a| *a %= p);
                }
            }
            for (dst, a) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = (a % p) as Scalar;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_vec(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_vec(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: Scalar) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix::from_vec(f, self.rows, self.cols, data)
    }

    /// Kronecker product; row index `(i, k) -> i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if b != 0 {
                            out.data[(i * rhs.rows + k) * out.cols + j * rhs.cols + l] =
                                f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn kron_all(field: Fp, factors: &[&Matrix]) -> Matrix {
        factors
            .iter()
            .fold(Matrix::identity(field, 1), |acc, m| acc.kron(m))
    }

    pub fn vstack(field: Fp, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix::from_vec(field, rows, cols, data)
    }

    pub fn hstack(field: Fp, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                out.row_mut(r)[off..off + b.cols].copy_from_slice(b.row(r));
            }
            off += b.cols;
        }
        out
    }

    /// Sub-matrix made of the given rows.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix::from_vec(self.field, rows.len(), self.cols, data)
    }

    /// Sub-matrix made of the given columns.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// `v . self` for a row vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length vs matrix rows");
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                *slot += a as u64 * b as u64;
            }
        }
        acc.into_iter().map(|a| (a % p) as Scalar).collect()
    }

    /// Gauss-Jordan elimination in place; optionally mirrors row operations
    /// onto `companion`. Returns the pivot columns.
    fn eliminate(&mut self, mut companion: Option<&mut Matrix>) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                self.swap_rows(pr, r);
                if let Some(t) = companion.as_deref_mut() {
                    t.swap_rows(pr, r);
                }
            }
            let inv = f.inv(self.get(r, c));
            if inv != 1 {
                self.scale_row(r, inv);
                if let Some(t) = companion.as_deref_mut() {
                    t.scale_row(r, inv);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor != 0 {
                    let neg = f.neg(factor);
                    self.axpy_row(i, r, neg);
                    if let Some(t) = companion.as_deref_mut() {
                        t.axpy_row(i, r, neg);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: Scalar) {
        let f = self.field;
        self.row_mut(r).iter_mut().for_each(|x| *x = f.mul(*x, s));
    }

    /// row[dst] += s * row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, s: Scalar) {
        let f = self.field;
        let cols = self.cols;
        for c in 0..cols {
            let v = self.data[src * cols + c];
            if v != 0 {
                let d = &mut self.data[dst * cols + c];
                *d = f.mul_add(v, s, *d);
            }
        }
    }

    /// Reduced row-echelon form with the transform that produces it.
    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let mut transform = Matrix::identity(self.field, self.rows);
        let pivots = reduced.eliminate(Some(&mut transform));
        Rref {
            reduced,
            rank: pivots.len(),
            transform,
            pivots,
        }
    }

    /// RREF without tracking the transform; returns `(reduced, pivots)`.
    pub fn rref_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(None);
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_pivots().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let r = self.rref();
        (r.rank == self.rows).then_some(r.transform)
    }

    /// Canonical solution `x` of `x . self = target`, free coordinates zero.
    pub fn solve_left(&self, target: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(target.len(), self.cols, "target length vs matrix cols");
        // x . M = t  <=>  M^T x^T = t^T; eliminate the augmented system.
        let f = self.field;
        let n = self.rows;
        let mut aug = Matrix::zeros(f, self.cols, n + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[c * (n + 1) + r] = self.get(r, c);
            }
        }
        for (c, &t) in target.iter().enumerate() {
            aug.data[c * (n + 1) + n] = t;
        }
        let pivots = aug.eliminate(None);
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![0; n];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, n);
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix[{}x{} over F_{}]", self.rows, self.cols, self.field.p())?;
        for r in self.row_iter() {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// Checks that `m` is `rows x cols`.
pub(crate) fn expect_shape(m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::dims(format!(
            "{what}: expected {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Small helpers on plain coordinate vectors.
pub mod vector {
    use crate::field::{Fp, Scalar};

    pub fn zero(n: usize) -> Vec<Scalar> {
        vec![0; n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    pub fn add_scaled(f: Fp, acc: &mut [Scalar], v: &[Scalar], s: Scalar) {
        if s == 0 {
            return;
        }
        for (a, &b) in acc.iter_mut().zip(v) {
            *a = f.mul_add(b, s, *a);
        }
    }

    pub fn sub(f: Fp, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    /// Outer product `a (x) b` flattened row-major.
    pub fn tensor(f: Fp, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for &x in a {
            for &y in b {
                out.push(f.mul(x, y));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(f(5), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(f(5), 2, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_over_f2_small() {
        let m = Matrix::from_ints(f(2), &[&[1, 1], &[1, 0]]);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::identity(f(2), 2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.transform.mul(&m), r.reduced);
    }

    #[test]
    fn solve_over_f3() {
        let m = Matrix::from_ints(f(3), &[&[2]]);
        assert_eq!(m.solve_left(&[1]), Some(vec![2]));
        let z = Matrix::zeros(f(3), 2, 2);
        assert_eq!(z.solve_left(&[1, 0]), None);
        let id = Matrix::identity(f(3), 3);
        assert_eq!(id.solve_left(&[2, 0, 1]), Some(vec![2, 0, 1]));
    }

    #[test]
    fn solve_sets_free_coordinates_to_zero() {
        // rows (1,0), (1,0), (0,1): x0 + x1 = 1, x2 = 1 -> canonical x = (1,0,1)
        let m = Matrix::from_ints(f(5), &[&[1, 0], &[1, 0], &[0, 1]]);
        assert_eq!(m.solve_left(&[1, 1]), Some(vec![1, 0, 1]));
    }

    #[test]
    fn kron_shape_and_values() {
        let a = Matrix::from_ints(f(7), &[&[1, 2]]);
        let b = Matrix::from_ints(f(7), &[&[3], &[4]]);
        let k = a.kron(&b);
        assert_eq!(k, Matrix::from_ints(f(7), &[&[3, 6], &[4, 8]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(f(5), &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f(5), 2));
    }
}
