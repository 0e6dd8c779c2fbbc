//! Spaces of linear maps `M -> N` commuting with prescribed actions, as
//! subspaces of the flattened `dim M x dim N` matrix space.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::module::{Bimodule, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    rows: usize,
    cols: usize,
    space: Subspace,
}

impl HomSpace {
    /// All linear maps.
    pub fn full(field: Fp, rows: usize, cols: usize) -> Self {
        HomSpace {
            rows,
            cols,
            space: Subspace::full(field, rows * cols),
        }
    }

    pub fn from_subspace(rows: usize, cols: usize, space: Subspace) -> Self {
        assert_eq!(space.ambient(), rows * cols);
        HomSpace { rows, cols, space }
    }

    /// Maps `F` with `X_k F = F Y_k` for all pairs in `constraints`.
    pub fn solve(field: Fp, rows: usize, cols: usize, constraints: &[(&Matrix, &Matrix)]) -> Self {
        let eqs = commutation_system(field, rows, cols, constraints);
        HomSpace {
            rows,
            cols,
            space: kernel_basis(&eqs),
        }
    }

    pub fn field(&self) -> Fp {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn source_dim(&self) -> usize {
        self.rows
    }

    pub fn target_dim(&self) -> usize {
        self.cols
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn from_coords(&self, coords: &[Scalar]) -> Matrix {
        Matrix::from_vec(self.field(), self.rows, self.cols, self.space.element(coords))
    }

    pub fn basis_map(&self, i: usize) -> Matrix {
        Matrix::from_vec(self.field(), self.rows, self.cols, self.space.basis().row(i).to_vec())
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.basis_map(i)).collect()
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        f.rows() == self.rows && f.cols() == self.cols && self.space.contains_vector(f.data())
    }

    pub fn coords(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        if f.rows() != self.rows || f.cols() != self.cols {
            return None;
        }
        self.space.coordinates(f.data())
    }

    /// Coordinates, or a consistency error naming `what`.
    pub fn coords_or(&self, f: &Matrix, what: &str) -> Result<Vec<Scalar>> {
        self.coords(f)
            .ok_or_else(|| Error::consistency(format!("{what} is not in the expected Hom space")))
    }

    /// Evaluate the map with coordinates `coords` at the element `m`.
    pub fn evaluate(&self, coords: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.from_coords(coords).apply(m)
    }

    /// The Hom space as a module over `alg`, where basis element `k` of `alg`
    /// acts by `act(k, F)`; on the right if `right` is set, else on the left.
    /// Fails if the space is not stable.
    pub fn as_module(
        &self,
        alg: Arc<Algebra>,
        right: bool,
        act: impl Fn(usize, &Matrix) -> Matrix,
    ) -> Result<Bimodule> {
        let acts = self.action_matrices(alg.dim(), act)?;
        if right {
            Bimodule::right_module(self.dim(), alg, acts)
        } else {
            Bimodule::left_module(self.dim(), alg, acts)
        }
    }

    /// In coordinates, the matrices of `F -> act(k, F)` for `k < count`.
    pub fn action_matrices(&self, count: usize, act: impl Fn(usize, &Matrix) -> Matrix) -> Result<Vec<Matrix>> {
        let f = self.field();
        let n = self.dim();
        let basis = self.basis_maps();
        (0..count)
            .map(|k| {
                let mut m = Matrix::zeros(f, n, n);
                for (i, b) in basis.iter().enumerate() {
                    let img = act(k, b);
                    let c = self.coords(&img).ok_or_else(|| {
                        Error::hypothesis("Hom space is not stable under the prescribed action")
                    })?;
                    m.row_mut(i).copy_from_slice(&c);
                }
                Ok(m)
            })
            .collect()
    }
}

/// Equation matrix of `F -> X F - F Y` (stacked over the constraints) on the
/// flattened `rows x cols` space: row `i*cols + j` is the image of `E_ij`.
fn commutation_system(field: Fp, rows: usize, cols: usize, constraints: &[(&Matrix, &Matrix)]) -> Matrix {
    let block = rows * cols;
    let mut eqs = Matrix::zeros(field, block, block * constraints.len());
    for (c, (x, y)) in constraints.iter().enumerate() {
        assert_eq!((x.rows(), x.cols()), (rows, rows));
        assert_eq!((y.rows(), y.cols()), (cols, cols));
        let off = c * block;
        for i in 0..rows {
            for j in 0..cols {
                let row = eqs.row_mut(i * cols + j);
                // X E_ij: entry (r, j) = X[r][i]
                for r in 0..rows {
                    let v = x.get(r, i);
                    if v != 0 {
                        let slot = &mut row[off + r * cols + j];
                        *slot = field.add(*slot, v);
                    }
                }
                // E_ij Y: entry (i, s) = Y[j][s]
                for s in 0..cols {
                    let v = y.get(j, s);
                    if v != 0 {
                        let slot = &mut row[off + i * cols + s];
                        *slot = field.sub(*slot, v);
                    }
                }
            }
        }
    }
    eqs
}

/// Maps `m -> n` commuting with the actions on the requested side(s).
pub fn hom_space(m: &Bimodule, n: &Bimodule, side: Side) -> Result<HomSpace> {
    let mut constraints: Vec<(&Matrix, &Matrix)> = Vec::new();
    if matches!(side, Side::Left | Side::Both) {
        if m.left_algebra() != n.left_algebra() {
            return Err(Error::AlgebraMismatch("Hom: left algebras differ".into()));
        }
        constraints.extend(m.left_actions().iter().zip(n.left_actions()));
    }
    if matches!(side, Side::Right | Side::Both) {
        if m.right_algebra() != n.right_algebra() {
            return Err(Error::AlgebraMismatch("Hom: right algebras differ".into()));
        }
        constraints.extend(m.right_actions().iter().zip(n.right_actions()));
    }
    Ok(HomSpace::solve(m.field(), m.dim(), n.dim(), &constraints))
}

/// Equation columns for extra linear constraints `F -> L(F)`, given the images
/// of the elementary matrices. Used to intersect a Hom space with further
/// linear conditions.
pub fn constrained_hom(
    field: Fp,
    rows: usize,
    cols: usize,
    base: &[(&Matrix, &Matrix)],
    extra: impl Fn(usize, usize) -> Vec<Scalar>,
    extra_len: usize,
) -> HomSpace {
    let commute = commutation_system(field, rows, cols, base);
    let mut eqs = Matrix::zeros(field, rows * cols, commute.cols() + extra_len);
    for i in 0..rows {
        for j in 0..cols {
            let r = i * cols + j;
            let row = eqs.row_mut(r);
            row[..commute.cols()].copy_from_slice(commute.row(r));
            let e = extra(i, j);
            debug_assert_eq!(e.len(), extra_len);
            row[commute.cols()..].copy_from_slice(&e);
        }
    }
    HomSpace {
        rows,
        cols,
        space: kernel_basis(&eqs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endomorphisms_of_regular_module() {
        let f = Fp::new(3).unwrap();
        let a = Arc::new(Algebra::matrix_algebra(f, 2));
        let m = Bimodule::regular(a.clone()).as_right();
        let h = hom_space(&m, &m, Side::Right).unwrap();
        assert_eq!(h.dim(), a.dim());
        for g in h.basis_maps() {
            assert!(m.is_linear_map(&m, &g, Side::Right));
        }
    }

    #[test]
    fn dual_numbers_quotient_into_regular() {
        let f = Fp::new(2).unwrap();
        let t = Arc::new(Algebra::truncated_polynomial(f, 2));
        let reg = Bimodule::regular(t).as_right();
        let (q, _, _) = reg.quotient(&Subspace::span(f, 2, &[vec![0, 1]])).unwrap();
        let h = hom_space(&q, &reg, Side::Right).unwrap();
        assert_eq!(h.dim(), 1);
        // the image lands in span{x}
        assert_eq!(h.basis_map(0), Matrix::from_ints(f, &[&[0, 1]]));
    }

    #[test]
    fn over_ground_field_everything() {
        let f = Fp::new(5).unwrap();
        let h = hom_space(&Bimodule::vector_space(f, 2), &Bimodule::vector_space(f, 3), Side::Both).unwrap();
        assert_eq!(h.dim(), 6);
    }
}
