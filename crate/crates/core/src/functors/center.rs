//! The cotensor `M []_D N` as the `S^op`-centralizer of `M (x)_B N` for a
//! ring map `kappa : S -> *D*`, with
//! `gamma : x -> [s^op -> s^op x]` and `beta : f -> f(1)`.
//!
//! `S` acts on `M` by `m s = sum m0 kappa(s)(m1)` and on `N` by
//! `s n = sum kappa(s)(n-1) n0`.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::comodule::{Comodule, LeftComodule};
use crate::coring::Coring;
use crate::dual::{DualRing, DualSide};
use crate::error::{Error, Result};
use crate::hom::HomSpace;
use crate::linalg::{vector, Matrix, Subspace};
use crate::pairing::AlphaCheck;
use crate::trace::left_projectivity_test;

use super::cotensor::cotensor;

/// A left pairing `(D, S : B)` given by a ring map into `*D*`.
#[derive(Clone, Debug)]
pub struct BilinearPairing {
    pub s: Arc<Algebra>,
    pub coring: Arc<Coring>,
    pub dual: Arc<DualRing>,
    pub kappa: AlgebraMorphism,
    pub alpha: AlphaCheck,
}

impl BilinearPairing {
    /// `kappa_map` is `dim S x dim *D*`.
    pub fn new(s: Arc<Algebra>, coring: Arc<Coring>, kappa_map: Matrix) -> Result<Self> {
        let dual = Arc::new(DualRing::new(coring.clone(), DualSide::Bi)?);
        let kappa = AlgebraMorphism::new(s.clone(), dual.algebra.clone(), kappa_map)?;
        let projective = left_projectivity_test(coring.carrier())?.projective;
        let f = coring.field();
        let (dd, db) = (coring.dim(), coring.base().dim());
        let mut pairing = Matrix::zeros(f, dd, s.dim() * db);
        for k in 0..s.dim() {
            let fk = dual.functional(kappa.map.row(k));
            for u in 0..dd {
                for j in 0..db {
                    pairing.set(u, k * db + j, fk.get(u, j));
                }
            }
        }
        let injective = pairing.rank() == dd;
        Ok(BilinearPairing {
            s,
            coring,
            dual,
            kappa,
            alpha: AlphaCheck { projective, injective },
        })
    }

    /// `S = *D*` with `kappa = id`.
    pub fn canonical(coring: Arc<Coring>) -> Result<Self> {
        let dual = DualRing::new(coring.clone(), DualSide::Bi)?;
        let id = Matrix::identity(coring.field(), dual.dim());
        BilinearPairing::new(dual.algebra.clone(), coring, id)
    }

    fn functional(&self, k: usize) -> Matrix {
        self.dual.functional(self.kappa.map.row(k))
    }

    /// `m -> m s_k` on `M`.
    pub fn right_action(&self, m: &Comodule, k: usize) -> Matrix {
        let f = m.carrier().field();
        let racts = m.carrier().right_actions();
        let db = racts.len();
        let mut grid = Matrix::zeros(f, m.dim() * db, m.dim());
        for i in 0..m.dim() {
            for (j, r) in racts.iter().enumerate() {
                grid.row_mut(i * db + j).copy_from_slice(r.row(i));
            }
        }
        let id = Matrix::identity(f, m.dim());
        m.rho_raw().mul(&id.kron(&self.functional(k))).mul(&grid)
    }

    /// `n -> s_k n` on `N`.
    pub fn left_action(&self, n: &LeftComodule, k: usize) -> Matrix {
        let f = n.carrier().field();
        let fk = self.functional(k);
        let dn = n.dim();
        let mut grid = Matrix::zeros(f, fk.rows() * dn, dn);
        for u in 0..fk.rows() {
            let act = n.carrier().left_action(fk.row(u));
            for k2 in 0..dn {
                grid.row_mut(u * dn + k2).copy_from_slice(act.row(k2));
            }
        }
        n.lambda_raw().mul(&grid)
    }
}

#[derive(Clone, Debug)]
pub struct CenterWitness {
    pub cotensor: Subspace,
    pub centralizer: Subspace,
    /// `Hom` of `S^op`-bimodules `S^op -> M (x)_B N`.
    pub hom: HomSpace,
    /// `dim(M [] N) x dim hom`.
    pub gamma: Matrix,
    /// `dim hom x dim(M [] N)`.
    pub beta: Matrix,
    pub equal: bool,
    pub inverse: bool,
}

impl CenterWitness {
    pub fn holds(&self) -> bool {
        self.equal && self.inverse
    }
}

pub fn cotensor_as_center(q: &BilinearPairing, m: &Comodule, n: &LeftComodule) -> Result<CenterWitness> {
    if !q.alpha.holds() {
        return Err(Error::hypothesis(q.alpha.reason()));
    }
    if **m.coring() != *q.coring || **n.coring() != *q.coring {
        return Err(Error::CoringMismatch("comodules are not over the pairing's coring".into()));
    }
    let cot = cotensor(m, n)?;
    let chain = &cot.chain;
    let f = q.s.field();
    let (dm, dn) = (m.dim(), n.dim());
    let (idm, idn) = (Matrix::identity(f, dm), Matrix::identity(f, dn));
    let ds = q.s.dim();
    let mut left = Vec::with_capacity(ds);
    let mut right = Vec::with_capacity(ds);
    let mut diffs = Vec::with_capacity(ds);
    for k in 0..ds {
        let l = chain.induced(chain, &[&q.right_action(m, k), &idn])?;
        let r = chain.induced(chain, &[&idm, &q.left_action(n, k)])?;
        diffs.push(l.sub(&r));
        left.push(l);
        right.push(r);
    }
    let d = chain.dim();
    let stacked = Matrix::hstack(f, d, &diffs.iter().collect::<Vec<_>>());
    let centralizer = crate::linalg::kernel_basis(&stacked);
    let equal = centralizer == cot.space;

    // f(s^op u^op) = s^op f(u^op), f(u^op s^op) = f(u^op) s^op; on S
    // coordinates s^op u^op = (u s)^op and u^op s^op = (s u)^op.
    let rm: Vec<Matrix> = (0..ds).map(|k| q.s.rmul_matrix(&vector::unit(ds, k))).collect();
    let lm: Vec<Matrix> = (0..ds).map(|k| q.s.lmul_matrix(&vector::unit(ds, k))).collect();
    let mut cons: Vec<(&Matrix, &Matrix)> = Vec::new();
    for k in 0..ds {
        cons.push((&rm[k], &left[k]));
        cons.push((&lm[k], &right[k]));
    }
    let hom = HomSpace::solve(f, ds, d, &cons);

    let basis = cot.space.basis();
    let mut gamma = Matrix::zeros(f, cot.dim(), hom.dim());
    let mut ok = true;
    for (r, x) in basis.row_iter().enumerate() {
        let mut map = Matrix::zeros(f, ds, d);
        for (u, l) in left.iter().enumerate() {
            map.row_mut(u).copy_from_slice(&l.apply(x));
        }
        match hom.coords(&map) {
            Some(c) => gamma.row_mut(r).copy_from_slice(&c),
            None => ok = false,
        }
    }
    let mut beta = Matrix::zeros(f, hom.dim(), cot.dim());
    for (r, map) in hom.basis_maps().iter().enumerate() {
        match cot.space.coordinates(&map.apply(q.s.unit())) {
            Some(c) => beta.row_mut(r).copy_from_slice(&c),
            None => ok = false,
        }
    }
    let inverse = ok
        && gamma.mul(&beta) == Matrix::identity(f, cot.dim())
        && beta.mul(&gamma) == Matrix::identity(f, hom.dim());
    Ok(CenterWitness {
        cotensor: cot.space,
        centralizer,
        hom,
        gamma,
        beta,
        equal,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn graded_example_matches_cotensor() {
        let f = Fp::new(2).unwrap();
        let c = Arc::new(Coring::grouplike(f, 2));
        let q = BilinearPairing::canonical(c.clone()).unwrap();
        assert!(q.alpha.holds());
        let m = Comodule::graded(c.clone(), &[0, 1]).unwrap();
        let n = LeftComodule::graded(c, &[0, 0, 1]).unwrap();
        let w = cotensor_as_center(&q, &m, &n).unwrap();
        assert_eq!(w.cotensor.dim(), 3);
        assert!(w.holds());
    }

    #[test]
    fn trivial_coring_is_everything() {
        let f = Fp::new(3).unwrap();
        let c = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f))));
        let q = BilinearPairing::canonical(c.clone()).unwrap();
        let m = Comodule::graded(c.clone(), &[0, 0]).unwrap();
        let n = LeftComodule::graded(c, &[0, 0]).unwrap();
        let w = cotensor_as_center(&q, &m, &n).unwrap();
        assert_eq!(w.centralizer.dim(), 4);
        assert!(w.holds());
    }
}
