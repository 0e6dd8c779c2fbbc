//! Induction `- (x)_A B : M^C -> M^D` and corestriction `(-)^theta`.

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix};
use crate::module::{Bimodule, Side};
use crate::morphism::CoringMorphism;
use crate::tensor::TensorChain;

/// `B` as an `(A, B)`-bimodule through `beta`.
pub fn b_over_a(phi: &CoringMorphism) -> Result<Bimodule> {
    Bimodule::regular(phi.target.base().clone()).restrict(&phi.beta, Side::Left)
}

/// `M (x)_A B` with its `D`-coaction and the tensor chain it lives in.
#[derive(Clone, Debug)]
pub struct Induced {
    pub comodule: Comodule,
    pub chain: TensorChain,
    /// `m -> m (x) 1_B`, `dim M x dim(M (x)_A B)`.
    pub unit: Matrix,
}

pub(crate) fn require_source(phi: &CoringMorphism, m: &Comodule) -> Result<()> {
    if **m.coring() != *phi.source {
        return Err(Error::CoringMismatch("comodule is not over the source coring".into()));
    }
    Ok(())
}

pub(crate) fn require_target(phi: &CoringMorphism, n: &Comodule) -> Result<()> {
    if **n.coring() != *phi.target {
        return Err(Error::CoringMismatch("comodule is not over the target coring".into()));
    }
    Ok(())
}

/// `m (x) b -> sum m0 (x) theta(m1) b`, read in `(M (x)_A B) (x)_B D`.
pub fn induction(phi: &CoringMorphism, m: &Comodule) -> Result<Induced> {
    require_source(phi, m)?;
    let d = &phi.target;
    let b = d.base();
    let f = d.field();
    let chain = TensorChain::pair(&m.carrier().as_right(), &b_over_a(phi)?)?;
    let (dm, db) = (m.dim(), b.dim());
    let mut unit = Matrix::zeros(f, dm, chain.dim());
    for i in 0..dm {
        let p = chain.pure(&[&vector::unit(dm, i), b.unit()]);
        unit.row_mut(i).copy_from_slice(&p);
    }
    let target = TensorChain::pair(chain.module(), d.carrier())?;
    let rho_raw = m.rho_raw();
    let mut raw = Matrix::zeros(f, dm * db, target.raw_dim());
    for j in 0..db {
        let theta_b = phi.theta.mul(&d.carrier().right_actions()[j]);
        let img = rho_raw.mul(&unit.kron(&theta_b));
        for i in 0..dm {
            raw.row_mut(i * db + j).copy_from_slice(img.row(i));
        }
    }
    let rho = chain.descend(&raw.mul(target.project()), "induced coaction")?;
    let comodule = Comodule::new(d.clone(), chain.module().clone(), rho)?;
    Ok(Induced { comodule, chain, unit })
}

/// `u (x) id_B` between two inductions.
pub fn induction_map(from: &Induced, to: &Induced, u: &Matrix) -> Matrix {
    let f = u.field();
    let db = from.chain.factors()[1].dim();
    from.chain.induced_unchecked(&to.chain, &[u, &Matrix::identity(f, db)])
}

/// `(M, (id (x) theta) rho_M)` for a morphism over a single base.
pub fn corestriction(phi: &CoringMorphism, m: &Comodule) -> Result<Comodule> {
    require_source(phi, m)?;
    if !phi.is_same_base() {
        return Err(Error::hypothesis("corestriction needs beta = id"));
    }
    let f = m.carrier().field();
    let raw = m.rho_raw().mul(&Matrix::identity(f, m.dim()).kron(&phi.theta));
    Comodule::from_raw(phi.target.clone(), m.carrier().clone(), &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::algebra::{Algebra, AlgebraMorphism};
    use crate::coring::Coring;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn identity_morphism_gives_isomorphic_comodule() {
        let c = Arc::new(Coring::grouplike(f2(), 2));
        let m = Comodule::graded(c.clone(), &[0, 1, 1]).unwrap();
        let ind = induction(&CoringMorphism::identity(c), &m).unwrap();
        assert!(ind.comodule.validate().is_ok());
        assert!(ind.unit.is_invertible());
        assert!(m.is_colinear(&ind.comodule, &ind.unit));
    }

    #[test]
    fn counit_forgets_grading() {
        let c = Arc::new(Coring::grouplike(f2(), 2));
        let phi = CoringMorphism::counit_to_trivial(c.clone());
        let m = Comodule::graded(c, &[0, 1]).unwrap();
        let ind = induction(&phi, &m).unwrap();
        assert_eq!(ind.comodule.dim(), 2);
        assert!(ind.comodule.validate().is_ok());
        let co = corestriction(&phi, &m).unwrap();
        assert!(co.validate().is_ok());
        // rho(m) = m (x) 1
        assert_eq!(co.rho(), &Matrix::identity(f2(), 2));
        assert!(co.is_colinear(&ind.comodule, &ind.unit));
    }

    #[test]
    fn base_change_to_f4() {
        let beta = AlgebraMorphism::unit_map(Arc::new(Algebra::f4()));
        let phi = CoringMorphism::base_change(beta);
        let m = Comodule::graded(phi.source.clone(), &[0, 0]).unwrap();
        let ind = induction(&phi, &m).unwrap();
        // F_2^2 (x) F_4 is 4-dimensional over F_2, i.e. F_4-dimension 2
        assert_eq!(ind.comodule.dim(), 4);
        assert!(ind.comodule.validate().is_ok());
    }
}
