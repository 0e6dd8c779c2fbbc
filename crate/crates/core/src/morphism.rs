//! Morphisms of corings `(theta : beta) : (C : A) -> (D : B)`.

use std::sync::Arc;

use crate::algebra::AlgebraMorphism;
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::linalg::{expect_shape, Matrix};
use crate::module::{Bimodule, Side};
use crate::report::Validation;

#[derive(Clone, Debug)]
pub struct CoringMorphism {
    pub source: Arc<Coring>,
    pub target: Arc<Coring>,
    pub beta: AlgebraMorphism,
    pub theta: Matrix,
}

impl CoringMorphism {
    pub fn new(source: Arc<Coring>, target: Arc<Coring>, beta: AlgebraMorphism, theta: Matrix) -> Result<Self> {
        if *beta.source != **source.base() || *beta.target != **target.base() {
            return Err(Error::AlgebraMismatch(
                "beta must map the source base algebra to the target base algebra".into(),
            ));
        }
        expect_shape(&theta, source.dim(), target.dim(), "theta")?;
        Ok(CoringMorphism {
            source,
            target,
            beta,
            theta,
        })
    }

    pub fn identity(c: Arc<Coring>) -> Self {
        let beta = AlgebraMorphism::identity(c.base().clone());
        let theta = Matrix::identity(c.field(), c.dim());
        CoringMorphism {
            source: c.clone(),
            target: c,
            beta,
            theta,
        }
    }

    /// `eps_C : C -> A` into the trivial `A`-coring.
    pub fn counit_to_trivial(c: Arc<Coring>) -> Self {
        let target = Arc::new(Coring::trivial(c.base().clone()));
        let beta = AlgebraMorphism::identity(c.base().clone());
        let theta = c.eps().clone();
        CoringMorphism {
            source: c,
            target,
            beta,
            theta,
        }
    }

    /// Trivial coring of `A` to trivial coring of `B`, `theta = beta`.
    pub fn base_change(beta: AlgebraMorphism) -> Self {
        let source = Arc::new(Coring::trivial(beta.source.clone()));
        let target = Arc::new(Coring::trivial(beta.target.clone()));
        let theta = beta.map.clone();
        CoringMorphism {
            source,
            target,
            beta,
            theta,
        }
    }

    pub fn is_same_base(&self) -> bool {
        self.beta.is_identity()
    }

    /// `D` as an `A`-bimodule through `beta`.
    pub fn target_over_source_base(&self) -> Result<Bimodule> {
        self.target.carrier().restrict(&self.beta, Side::Both)
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("coring morphism");
        v.merge(self.beta.validate());
        let d_a = match self.target_over_source_base() {
            Ok(m) => m,
            Err(e) => {
                v.check(false, || e.to_string());
                return v;
            }
        };
        let c = self.source.carrier();
        for k in 0..c.left_algebra().dim() {
            v.check(c.left_actions()[k].mul(&self.theta) == self.theta.mul(&d_a.left_actions()[k]), || {
                format!("theta is not left A-linear at e_{k}")
            });
            v.check(c.right_actions()[k].mul(&self.theta) == self.theta.mul(&d_a.right_actions()[k]), || {
                format!("theta is not right A-linear at e_{k}")
            });
        }
        if !v.is_ok() {
            return v;
        }
        let lhs_eps = self.theta.mul(self.target.eps());
        let rhs_eps = self.source.eps().mul(&self.beta.map);
        let dd = self.target.cc();
        let lhs_delta = self
            .source
            .delta_raw()
            .mul(&self.theta.kron(&self.theta))
            .mul(dd.project());
        let rhs_delta = self.theta.mul(self.target.delta());
        for i in 0..self.source.dim() {
            v.check(lhs_eps.row(i) == rhs_eps.row(i), || format!("eps_D . theta differs from beta . eps_C at c_{i}"));
            v.check(lhs_delta.row(i) == rhs_delta.row(i), || format!("comultiplications disagree at c_{i}"));
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Fp;

    #[test]
    fn standard_morphisms_validate() {
        let g = Arc::new(Coring::grouplike(Fp::new(2).unwrap(), 2));
        assert!(CoringMorphism::identity(g.clone()).validate().is_ok());
        assert!(CoringMorphism::counit_to_trivial(g).validate().is_ok());
        let f4 = Arc::new(Algebra::f4());
        let beta = AlgebraMorphism::unit_map(f4);
        assert!(CoringMorphism::base_change(beta).validate().is_ok());
        let sw = Arc::new(Coring::sweedler(Arc::new(Algebra::f4())));
        assert!(CoringMorphism::counit_to_trivial(sw).validate().is_ok());
    }

    #[test]
    fn non_comultiplicative_map_fails() {
        let g = Arc::new(Coring::grouplike(Fp::new(2).unwrap(), 2));
        let swap_to_sum = Matrix::from_ints(g.field(), &[&[1, 1], &[0, 1]]);
        let m = CoringMorphism::new(g.clone(), g.clone(), AlgebraMorphism::identity(g.base().clone()), swap_to_sum).unwrap();
        assert!(!m.validate().is_ok());
    }
}
