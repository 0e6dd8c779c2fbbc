//! Measuring left pairings `(T, C : A)` with `kappa : T -> *C`, the
//! alpha-condition, and the rational functor.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::comodule::Comodule;
use crate::coring::Coring;
use crate::dual::{DualRing, DualSide};
use crate::error::{Error, Result};
use crate::linalg::{preimage, vector, Matrix, Subspace};
use crate::module::{Bimodule, Side};
use crate::morphism::CoringMorphism;
use crate::report::Validation;
use crate::tensor::TensorChain;
use crate::trace::left_projectivity_test;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCheck {
    /// `C` is projective as a left `A`-module.
    pub projective: bool,
    /// `alpha_A : C -> Hom(T, A)` is injective.
    pub injective: bool,
}

impl AlphaCheck {
    pub fn holds(&self) -> bool {
        self.projective && self.injective
    }

    pub fn reason(&self) -> String {
        match (self.projective, self.injective) {
            (true, true) => "C is left A-projective and alpha_A is injective".into(),
            (false, true) => "C is not projective as a left A-module".into(),
            (true, false) => "alpha_A is not injective for this kappa".into(),
            (false, false) => "C is not left A-projective and alpha_A is not injective".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MeasuringPairing {
    pub t: Arc<Algebra>,
    pub coring: Arc<Coring>,
    pub dual: Arc<DualRing>,
    pub kappa: AlgebraMorphism,
    /// Structure map `A -> T` with `kappa . eta = iota`.
    pub eta: AlgebraMorphism,
    pub alpha: AlphaCheck,
}

/// Result of the rational functor.
#[derive(Clone, Debug)]
pub struct Rational {
    /// `Rat^C(M)` inside `M`.
    pub space: Subspace,
    /// The subspace as a `C`-comodule, in the coordinates of `space`.
    pub comodule: Comodule,
    /// The subspace as a right `T`-module.
    pub module: Bimodule,
}

impl MeasuringPairing {
    pub fn new(t: Arc<Algebra>, coring: Arc<Coring>, kappa_map: Matrix) -> Result<Self> {
        let dual = Arc::new(DualRing::new(coring.clone(), DualSide::Left)?);
        let kappa = AlgebraMorphism::new(t.clone(), dual.algebra.clone(), kappa_map)?;
        kappa.validate().into_result()?;
        let iota = dual.iota()?;
        let a = coring.base().clone();
        let eta = if a.dim() == 1 {
            let e = AlgebraMorphism::unit_map(t.clone());
            AlgebraMorphism::new(a.clone(), t.clone(), e.map)?
        } else {
            let mut map = Matrix::zeros(t.field(), a.dim(), t.dim());
            for k in 0..a.dim() {
                let x = kappa.map.solve_left(iota.map.row(k)).ok_or_else(|| {
                    Error::hypothesis("kappa is not a morphism of A-rings: iota(A) is not in kappa(T)")
                })?;
                map.row_mut(k).copy_from_slice(&x);
            }
            let eta = AlgebraMorphism::new(a.clone(), t.clone(), map)?;
            eta.validate().into_result()?;
            eta
        };
        if eta.map.mul(&kappa.map) != iota.map {
            return Err(Error::hypothesis("kappa is not a morphism of A-rings"));
        }
        let mut p = MeasuringPairing {
            t,
            coring,
            dual,
            kappa,
            eta,
            alpha: AlphaCheck {
                projective: false,
                injective: false,
            },
        };
        p.alpha = p.compute_alpha()?;
        Ok(p)
    }

    /// `(*C, C)` with `kappa = id`.
    pub fn canonical(coring: Arc<Coring>) -> Result<Self> {
        let dual = DualRing::new(coring.clone(), DualSide::Left)?;
        let id = Matrix::identity(coring.field(), dual.dim());
        MeasuringPairing::new(dual.algebra.clone(), coring, id)
    }

    /// `kappa(t_k)` as a `dim C x dim A` matrix.
    pub fn functional(&self, k: usize) -> Matrix {
        self.dual.functional(self.kappa.map.row(k))
    }

    /// `kappa` onto `*C`; the finite-dimensional reading of density.
    pub fn is_dense(&self) -> bool {
        self.kappa.map.rank() == self.dual.dim()
    }

    fn compute_alpha(&self) -> Result<AlphaCheck> {
        let projective = left_projectivity_test(self.coring.carrier())?.projective;
        // alpha_A on A (x)_A C = C: c -> [t -> <t, c>]
        let f = self.coring.field();
        let (dc, da, dt) = (self.coring.dim(), self.coring.base().dim(), self.t.dim());
        let mut m = Matrix::zeros(f, dc, dt * da);
        for k in 0..dt {
            let g = self.functional(k);
            for c in 0..dc {
                m.row_mut(c)[k * da..(k + 1) * da].copy_from_slice(g.row(c));
            }
        }
        Ok(AlphaCheck {
            projective,
            injective: m.rank() == dc,
        })
    }

    fn require_alpha(&self) -> Result<()> {
        if self.alpha.holds() {
            Ok(())
        } else {
            Err(Error::hypothesis(format!("alpha-condition fails: {}", self.alpha.reason())))
        }
    }

    /// `C` as a right `T`-module, `c <- t = sum c1 <t, c2>`.
    pub fn coring_module(&self) -> Bimodule {
        let acts = (0..self.t.dim())
            .map(|k| self.dual.right_action_on_coring(&self.functional(k)))
            .collect();
        Bimodule::right_module(self.coring.dim(), self.t.clone(), acts).expect("shapes")
    }

    /// A right `T`-module viewed as a right `A`-module through `eta`.
    pub fn as_base_module(&self, m: &Bimodule) -> Result<Bimodule> {
        if **m.right_algebra() != *self.t {
            return Err(Error::AlgebraMismatch("module is not over the pairing's ring".into()));
        }
        m.as_right().restrict(&self.eta, Side::Right)
    }

    /// `alpha_M : M (x)_A C -> Hom(T, M)` for a right `A`-module `M`, with
    /// `Hom(T, M)` flattened as `dim T x dim M` matrices.
    pub fn alpha_matrix(&self, m_a: &Bimodule, mc: &TensorChain) -> Result<Matrix> {
        let f = m_a.field();
        let (dm, dc, dt) = (m_a.dim(), self.coring.dim(), self.t.dim());
        let mut raw = Matrix::zeros(f, dm * dc, dt * dm);
        for k in 0..dt {
            let g = self.functional(k);
            for c in 0..dc {
                let act = m_a.right_action(g.row(c));
                for i in 0..dm {
                    raw.row_mut(i * dc + c)[k * dm..(k + 1) * dm].copy_from_slice(act.row(i));
                }
            }
        }
        mc.descend(&raw, "alpha")
    }

    /// `rho_M : M -> Hom(T, M)`, `m -> [t -> m t]`.
    pub fn rho_matrix(&self, m: &Bimodule) -> Matrix {
        let f = m.field();
        let (dm, dt) = (m.dim(), self.t.dim());
        let mut out = Matrix::zeros(f, dm, dt * dm);
        for (k, act) in m.right_actions().iter().enumerate() {
            for i in 0..dm {
                out.row_mut(i)[k * dm..(k + 1) * dm].copy_from_slice(act.row(i));
            }
        }
        out
    }

    /// `Rat^C(M) = rho_M^{-1}(Im alpha_M)` with its coaction `alpha^{-1} rho`.
    pub fn rat(&self, m: &Bimodule) -> Result<Rational> {
        self.require_alpha()?;
        let m = m.as_right();
        let m_a = self.as_base_module(&m)?;
        let mc = TensorChain::pair(&m_a, self.coring.carrier())?;
        let alpha = self.alpha_matrix(&m_a, &mc)?;
        let image = Subspace::row_space(&alpha);
        let space = preimage(&self.rho_matrix(&m), &image)?;
        let (module, _) = m
            .submodule(&space)
            .map_err(|_| Error::consistency("Rat is not a T-submodule"))?;
        let comodule = self.comodule_on_rational(&module)?;
        Ok(Rational {
            space,
            comodule,
            module,
        })
    }

    fn comodule_on_rational(&self, s: &Bimodule) -> Result<Comodule> {
        let s_a = self.as_base_module(s)?;
        let sc = TensorChain::pair(&s_a, self.coring.carrier())?;
        let alpha = self.alpha_matrix(&s_a, &sc)?;
        if alpha.rank() != sc.dim() {
            return Err(Error::consistency("alpha is not injective on the rational part"));
        }
        let rho = self.rho_matrix(s);
        let mut coaction = Matrix::zeros(s.field(), s.dim(), sc.dim());
        for i in 0..s.dim() {
            let x = alpha
                .solve_left(rho.row(i))
                .ok_or_else(|| Error::consistency("rational element without preimage under alpha"))?;
            coaction.row_mut(i).copy_from_slice(&x);
        }
        Comodule::new(self.coring.clone(), s_a, coaction)
    }

    /// The comodule structure of a rational module; rejects non-rational input.
    pub fn comodule_from_module(&self, m: &Bimodule) -> Result<Comodule> {
        let r = self.rat(m)?;
        if !r.space.is_full() {
            let n = m.dim();
            let element = (0..n)
                .map(|i| vector::unit(n, i))
                .find(|v| !r.space.contains_vector(v))
                .expect("a proper subspace misses some basis vector");
            return Err(Error::NotRational { element });
        }
        Ok(r.comodule)
    }

    /// `M` as a right `T`-module, `m t = sum m0 <t, m1>`.
    pub fn module_from_comodule(&self, m: &Comodule) -> Result<Bimodule> {
        if m.coring() != &self.coring {
            return Err(Error::CoringMismatch("comodule over another coring".into()));
        }
        let m_a = m.carrier().as_right();
        let alpha = self.alpha_matrix(&m_a, m.mc())?;
        let img = m.rho().mul(&alpha);
        let dm = m.dim();
        let acts = (0..self.t.dim())
            .map(|k| img.select_cols(&((k * dm)..((k + 1) * dm)).collect::<Vec<_>>()))
            .collect();
        Bimodule::right_module(dm, self.t.clone(), acts)
    }
}

/// Morphism of measuring pairings `(xi, theta : beta) : (T, C : A) -> (S, D : B)`
/// with `xi : S -> T` and `<s, theta(c)> = beta(<xi(s), c>)`.
#[derive(Clone, Debug)]
pub struct PairingMorphism {
    pub source: Arc<MeasuringPairing>,
    pub target: Arc<MeasuringPairing>,
    pub xi: AlgebraMorphism,
    pub coring_morphism: CoringMorphism,
}

impl PairingMorphism {
    pub fn new(
        source: Arc<MeasuringPairing>,
        target: Arc<MeasuringPairing>,
        xi: AlgebraMorphism,
        coring_morphism: CoringMorphism,
    ) -> Result<Self> {
        if xi.source != target.t || xi.target != source.t {
            return Err(Error::AlgebraMismatch("xi must map S to T".into()));
        }
        if coring_morphism.source != source.coring || coring_morphism.target != target.coring {
            return Err(Error::CoringMismatch("coring morphism endpoints".into()));
        }
        Ok(PairingMorphism {
            source,
            target,
            xi,
            coring_morphism,
        })
    }

    /// Canonical pairings with `xi = -- . theta` when `*D . theta` lands in `*C`,
    /// available for same-base morphisms.
    pub fn canonical(phi: CoringMorphism) -> Result<Self> {
        if !phi.is_same_base() {
            return Err(Error::hypothesis("canonical pairing morphism needs beta = id"));
        }
        let source = Arc::new(MeasuringPairing::canonical(phi.source.clone())?);
        let target = Arc::new(MeasuringPairing::canonical(phi.target.clone())?);
        let (ds, dt) = (&source.dual, &target.dual);
        let mut map = Matrix::zeros(phi.theta.field(), dt.dim(), ds.dim());
        for k in 0..dt.dim() {
            let g = phi.theta.mul(&dt.basis_functional(k));
            let c = ds.coords(&g).ok_or_else(|| Error::consistency("g . theta is not in *C"))?;
            map.row_mut(k).copy_from_slice(&c);
        }
        let xi = AlgebraMorphism::new(target.t.clone(), source.t.clone(), map)?;
        PairingMorphism::new(source, target, xi, phi)
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("pairing morphism");
        v.merge(self.xi.validate());
        v.merge(self.coring_morphism.validate());
        let theta = &self.coring_morphism.theta;
        let beta = &self.coring_morphism.beta.map;
        for s in 0..self.target.t.dim() {
            let lhs = theta.mul(&self.target.functional(s));
            let xs = self.xi.apply(&vector::unit(self.target.t.dim(), s));
            let rhs = self.source.dual.functional(&self.source.kappa.apply(&xs)).mul(beta);
            v.check(lhs == rhs, || format!("<s, theta(c)> differs from beta(<xi(s), c>) at s_{s}"));
        }
        // xi is a morphism of A-rings: xi . eta_S . beta = eta_T
        let eta_s_beta = self.coring_morphism.beta.map.mul(&self.target.eta.map).mul(&self.xi.map);
        v.check(eta_s_beta == self.source.eta.map, || "xi is not compatible with the structure maps".into());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn canonical_grouplike_satisfies_alpha() {
        let p = MeasuringPairing::canonical(Arc::new(Coring::grouplike(f2(), 2))).unwrap();
        assert!(p.alpha.holds());
        assert!(p.is_dense());
    }

    #[test]
    fn unit_subring_breaks_injectivity() {
        let c = Arc::new(Coring::grouplike(f2(), 2));
        let dual = DualRing::new(c.clone(), DualSide::Left).unwrap();
        let eps = dual.coords(c.eps()).unwrap();
        let t = Arc::new(Algebra::ground(f2()));
        let p = MeasuringPairing::new(t, c, Matrix::row_vector(f2(), &eps)).unwrap();
        assert!(p.alpha.projective);
        assert!(!p.alpha.injective);
    }

    #[test]
    fn trivial_coring_identity_pairing() {
        let c = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f2()))));
        let p = MeasuringPairing::canonical(c).unwrap();
        assert!(p.alpha.holds());
    }

    #[test]
    fn nilpotent_pairing_rat_is_x() {
        let t = Arc::new(Algebra::truncated_polynomial(f2(), 2));
        let c = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f2()))));
        // kappa(1) = eps, kappa(x) = 0
        let p = MeasuringPairing::new(t.clone(), c, Matrix::from_ints(f2(), &[&[1], &[0]])).unwrap();
        let r = p.rat(&Bimodule::regular(t).as_right()).unwrap();
        assert_eq!(r.space, Subspace::span(f2(), 2, &[vec![0, 1]]));
        assert!(r.comodule.validate().is_ok());
    }

    #[test]
    fn canonical_rat_is_everything_and_round_trips() {
        let c = Arc::new(Coring::grouplike(f2(), 2));
        let p = MeasuringPairing::canonical(c.clone()).unwrap();
        let m = Comodule::graded(c, &[0, 0, 1]).unwrap();
        let module = p.module_from_comodule(&m).unwrap();
        assert!(module.validate().is_ok());
        let back = p.comodule_from_module(&module).unwrap();
        assert_eq!(back.rho(), m.rho());
        let r = p.rat(&module).unwrap();
        assert!(r.space.is_full());
    }

    #[test]
    fn coring_as_module_matches_hit_action() {
        let sw = Arc::new(Coring::sweedler(Arc::new(Algebra::f4())));
        let p = MeasuringPairing::canonical(sw.clone()).unwrap();
        let from_comodule = p.module_from_comodule(&Comodule::regular(sw)).unwrap();
        assert_eq!(from_comodule, p.coring_module());
    }

    #[test]
    fn non_rational_module_is_rejected() {
        let t = Arc::new(Algebra::truncated_polynomial(f2(), 2));
        let c = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f2()))));
        let p = MeasuringPairing::new(t.clone(), c, Matrix::from_ints(f2(), &[&[1], &[0]])).unwrap();
        let err = p.comodule_from_module(&Bimodule::regular(t).as_right()).unwrap_err();
        assert_eq!(err, Error::NotRational { element: vec![1, 0] });
    }
}
