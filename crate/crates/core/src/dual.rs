//! The three convolution duals of a coring.
//!
//! * left, `*C = Hom_{A-}(C, A)`: `(f *l g)(c) = sum g(c1 f(c2))`
//! * right, `C* = Hom_{-A}(C, A)`: `(f *r g)(c) = sum f(g(c1) c2)`
//! * bilinear, `*C* = Hom_{A-A}(C, A)`: `(f * g)(c) = sum g(c1) f(c2)`
//!
//! Each has unit `eps`. Elements are `dim C x dim A` matrices; the algebra
//! basis is the RREF basis of the Hom subspace.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::{hom_space, HomSpace};
use crate::linalg::Matrix;
use crate::module::{Bimodule, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualSide {
    Left,
    Right,
    Bi,
}

#[derive(Clone, Debug)]
pub struct DualRing {
    pub side: DualSide,
    pub coring: Arc<Coring>,
    pub hom: HomSpace,
    pub algebra: Arc<Algebra>,
}

impl DualRing {
    pub fn new(coring: Arc<Coring>, side: DualSide) -> Result<Self> {
        let c = coring.carrier();
        let reg = Bimodule::regular(coring.base().clone());
        let hom = match side {
            DualSide::Left => hom_space(&c.as_left(), &reg.as_left(), Side::Left)?,
            DualSide::Right => hom_space(&c.as_right(), &reg.as_right(), Side::Right)?,
            DualSide::Bi => hom_space(c, &reg, Side::Both)?,
        };
        let n = hom.dim();
        let basis = hom.basis_maps();
        let mut mul = vec![0; n * n * n];
        for (a, fa) in basis.iter().enumerate() {
            for (b, fb) in basis.iter().enumerate() {
                let prod = convolve(&coring, side, fa, fb);
                let coords = hom.coords_or(&prod, "convolution product")?;
                mul[(a * n + b) * n..(a * n + b + 1) * n].copy_from_slice(&coords);
            }
        }
        let unit = hom.coords(coring.eps()).ok_or_else(|| {
            Error::hypothesis("counit is not A-linear, so it is not in the dual")
        })?;
        let algebra = Arc::new(Algebra::new(coring.field(), n, mul, unit)?);
        Ok(DualRing {
            side,
            coring,
            hom,
            algebra,
        })
    }

    pub fn dim(&self) -> usize {
        self.hom.dim()
    }

    /// Functional with the given coordinates.
    pub fn functional(&self, coords: &[Scalar]) -> Matrix {
        self.hom.from_coords(coords)
    }

    pub fn basis_functional(&self, k: usize) -> Matrix {
        self.hom.basis_map(k)
    }

    pub fn coords(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        self.hom.coords(f)
    }

    /// `<f, c>` in `A`.
    pub fn evaluate(&self, coords: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        self.functional(coords).apply(c)
    }

    pub fn product(&self, f: &Matrix, g: &Matrix) -> Matrix {
        convolve(&self.coring, self.side, f, g)
    }

    /// The ring map `A -> *C`, `a -> [c -> eps(c) a]` (left dual only).
    pub fn iota(&self) -> Result<AlgebraMorphism> {
        if self.side != DualSide::Left {
            return Err(Error::hypothesis("iota is defined for the left dual"));
        }
        let a = self.coring.base();
        let d = a.dim();
        let mut map = Matrix::zeros(a.field(), d, self.dim());
        for k in 0..d {
            let e = crate::linalg::vector::unit(d, k);
            let f = self.coring.eps().mul(&a.rmul_matrix(&e));
            let c = self.hom.coords_or(&f, "eps . a")?;
            map.row_mut(k).copy_from_slice(&c);
        }
        AlgebraMorphism::new(a.clone(), self.algebra.clone(), map)
    }

    /// Matrix of `c -> c <- f = sum c1 f(c2)` on `C` (left dual).
    pub fn right_action_on_coring(&self, f: &Matrix) -> Matrix {
        self.coring.delta_raw().mul(&self.coring.right_eval_grid(f))
    }
}

fn convolve(c: &Coring, side: DualSide, f: &Matrix, g: &Matrix) -> Matrix {
    let dl = c.delta_raw();
    match side {
        DualSide::Left => dl.mul(&c.right_eval_grid(f)).mul(g),
        DualSide::Right => dl.mul(&c.left_eval_grid(g)).mul(f),
        DualSide::Bi => {
            let a = c.base();
            let n = c.dim();
            let mut grid = Matrix::zeros(c.field(), n * n, a.dim());
            for i in 0..n {
                for j in 0..n {
                    let v = a.mul(g.row(i), f.row(j));
                    grid.row_mut(i * n + j).copy_from_slice(&v);
                }
            }
            dl.mul(&grid)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn all_sides() -> [DualSide; 3] {
        [DualSide::Left, DualSide::Right, DualSide::Bi]
    }

    #[test]
    fn trivial_dual_is_the_field() {
        let f2 = Fp::new(2).unwrap();
        let c = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f2))));
        for side in all_sides() {
            let d = DualRing::new(c.clone(), side).unwrap();
            assert_eq!(*d.algebra, Algebra::ground(f2));
        }
    }

    #[test]
    fn grouplike_dual_is_pointwise() {
        let f2 = Fp::new(2).unwrap();
        let c = Arc::new(Coring::grouplike(f2, 2));
        let d = DualRing::new(c, DualSide::Left).unwrap();
        assert_eq!(d.dim(), 2);
        // basis = indicator functions, product pointwise
        assert_eq!(*d.algebra, Algebra::diagonal(f2, 2));
    }

    #[test]
    fn duals_are_algebras() {
        let sw = Arc::new(Coring::sweedler(Arc::new(Algebra::f4())));
        let tr = Arc::new(Coring::trivial(Arc::new(Algebra::matrix_algebra(Fp::new(2).unwrap(), 2))));
        for c in [sw, tr] {
            for side in all_sides() {
                let d = DualRing::new(c.clone(), side).unwrap();
                assert!(d.algebra.validate().is_ok(), "{side:?}");
            }
            let left = DualRing::new(c.clone(), DualSide::Left).unwrap();
            assert!(left.iota().unwrap().validate().is_ok());
        }
    }

    #[test]
    fn sweedler_left_dual_is_matrix_sized() {
        // *(A (x) A) = Hom_{A-}(A (x) A, A) has F_2-dim 4 for A = F_4
        let sw = Arc::new(Coring::sweedler(Arc::new(Algebra::f4())));
        let d = DualRing::new(sw, DualSide::Left).unwrap();
        assert_eq!(d.dim(), 4);
    }
}
