//! Induction and coinduction between module categories along a morphism of
//! rings `xi : S -> T`, where `T` is an `A`-ring, `S` a `B`-ring and
//! `beta : A -> B`.
//!
//! * `M (x)_A B` is a right `S`-module by `(m (x) b) <- s = m xi(s) (x) b`;
//! * `Hom_{-S}(T (x)_A B, N)` is a right `T`-module by `(f <- t)(x) = f(t x)`;
//! * `Coind_L^K(N) = Sp(sigma[K], Hom_{-S}(T (x)_A B, N))`.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::hom::{hom_space, HomSpace};
use crate::linalg::{vector, Matrix, Subspace};
use crate::module::{Bimodule, Side};
use crate::pairing::PairingMorphism;
use crate::tensor::{act_grid, TensorChain};
use crate::trace::{subgenerated_check, trace_sp};

#[derive(Clone, Debug)]
pub struct SigmaContext {
    /// `A -> B`.
    pub beta: AlgebraMorphism,
    pub t: Arc<Algebra>,
    /// `A -> T`.
    pub eta_t: AlgebraMorphism,
    pub s: Arc<Algebra>,
    /// `B -> S`.
    pub eta_s: AlgebraMorphism,
    /// `S -> T`.
    pub xi: AlgebraMorphism,
}

/// A right `T`-module induced to a right `S`-module.
#[derive(Clone, Debug)]
pub struct InducedModule {
    /// `M (x)_A B`.
    pub chain: TensorChain,
    /// The tensor product with its right `S`-action; the left side is `M`'s.
    pub module: Bimodule,
}

/// `Hom_{-S}(T (x)_A B, N)` as a right `T`-module.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub tb: InducedModule,
    pub hom: HomSpace,
    pub module: Bimodule,
}

#[derive(Clone, Debug)]
pub struct CoindGeneral {
    pub hom: HomModule,
    /// `Sp(sigma[K], -)` inside the Hom module.
    pub space: Subspace,
    pub module: Bimodule,
}

/// The canonical isomorphism
/// `Hom_{-S}(M (x)_A B, N) -> Hom_{-T}(M, Hom_{-S}(T (x)_A B, N))`,
/// directly and as a composite of three steps through
/// `(M (x)_T T) (x)_A B` and `M (x)_T (T (x)_A B)`.
#[derive(Clone, Debug)]
pub struct CanIso {
    pub source: HomSpace,
    pub target: HomSpace,
    pub direct: Matrix,
    pub inverse: Matrix,
    pub steps: [Matrix; 3],
}

impl CanIso {
    pub fn composite(&self) -> Matrix {
        self.steps[0].mul(&self.steps[1]).mul(&self.steps[2])
    }

    pub fn holds(&self) -> bool {
        let f = self.direct.field();
        self.source.dim() == self.target.dim()
            && self.composite() == self.direct
            && self.direct.mul(&self.inverse) == Matrix::identity(f, self.source.dim())
            && self.inverse.mul(&self.direct) == Matrix::identity(f, self.target.dim())
    }
}

/// The bijection `Hom_{-S}(M (x)_A B, N) ~ Hom_{-T}(M, Coind_L^K(N))` for
/// `M` in `sigma[K]`, `N` in `sigma[L]`.
#[derive(Clone, Debug)]
pub struct GeneralAdjunction {
    pub can: CanIso,
    pub coind: CoindGeneral,
    /// Corestriction into the trace, `Hom_{-T}(M, Hom(...)) -> Hom_{-T}(M, Coind)`.
    pub step4: Matrix,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
}

impl GeneralAdjunction {
    pub fn holds(&self) -> bool {
        self.can.holds() && self.lhs_dim == self.rhs_dim && self.step4.rank() == self.rhs_dim
    }
}

impl SigmaContext {
    pub fn new(
        beta: AlgebraMorphism,
        eta_t: AlgebraMorphism,
        eta_s: AlgebraMorphism,
        xi: AlgebraMorphism,
    ) -> Result<Self> {
        if eta_t.source != beta.source || eta_s.source != beta.target {
            return Err(Error::AlgebraMismatch("structure maps must start at A and B".into()));
        }
        if xi.source != eta_s.target || xi.target != eta_t.target {
            return Err(Error::AlgebraMismatch("xi must map S to T".into()));
        }
        for m in [&beta, &eta_t, &eta_s, &xi] {
            m.validate().into_result()?;
        }
        if beta.map.mul(&eta_s.map).mul(&xi.map) != eta_t.map {
            return Err(Error::hypothesis("xi is not a morphism of A-rings"));
        }
        Ok(SigmaContext {
            t: eta_t.target.clone(),
            s: eta_s.target.clone(),
            beta,
            eta_t,
            eta_s,
            xi,
        })
    }

    /// `A = B = ground field`.
    pub fn over_ground(xi: AlgebraMorphism) -> Result<Self> {
        let f = xi.source.field();
        let k = Arc::new(Algebra::ground(f));
        let eta_t = AlgebraMorphism::new(k.clone(), xi.target.clone(), Matrix::row_vector(f, xi.target.unit()))?;
        let eta_s = AlgebraMorphism::new(k.clone(), xi.source.clone(), Matrix::row_vector(f, xi.source.unit()))?;
        SigmaContext::new(AlgebraMorphism::identity(k), eta_t, eta_s, xi)
    }

    pub fn from_pairing_morphism(pm: &PairingMorphism) -> Result<Self> {
        SigmaContext::new(
            pm.coring_morphism.beta.clone(),
            pm.source.eta.clone(),
            pm.target.eta.clone(),
            pm.xi.clone(),
        )
    }

    fn b_over_a(&self) -> Result<Bimodule> {
        Bimodule::regular(self.beta.target.clone()).restrict(&self.beta, Side::Left)
    }

    fn require_t(&self, m: &Bimodule) -> Result<()> {
        if **m.right_algebra() != *self.t {
            return Err(Error::AlgebraMismatch("expected a right T-module".into()));
        }
        Ok(())
    }

    fn require_s(&self, n: &Bimodule) -> Result<()> {
        if **n.right_algebra() != *self.s {
            return Err(Error::AlgebraMismatch("expected a right S-module".into()));
        }
        Ok(())
    }

    /// `M (x)_A B` with `S` acting through `xi`; fails if the action does not
    /// descend to the tensor product.
    pub fn induced_module(&self, m: &Bimodule) -> Result<InducedModule> {
        self.require_t(m)?;
        let f = m.field();
        let chain = TensorChain::pair(&m.restrict(&self.eta_t, Side::Right)?, &self.b_over_a()?)?;
        let id_b = Matrix::identity(f, self.beta.target.dim());
        let acts = (0..self.s.dim())
            .map(|k| {
                let raw = m.right_action(self.xi.map.row(k)).kron(&id_b).mul(chain.project());
                chain.descend(&raw, "induced S-action")
            })
            .collect::<Result<Vec<_>>>()?;
        let module = chain.module().with_right(self.s.clone(), acts)?;
        Ok(InducedModule { chain, module })
    }

    /// `T (x)_A B` as a `(T, S)`-bimodule.
    pub fn tb(&self) -> Result<InducedModule> {
        self.induced_module(&Bimodule::regular(self.t.clone()))
    }

    pub fn hom_module(&self, n: &Bimodule) -> Result<HomModule> {
        self.require_s(n)?;
        let tb = self.tb()?;
        let hom = hom_space(&tb.module.as_right(), &n.as_right(), Side::Right)?;
        let left = tb.module.left_actions().to_vec();
        let module = hom.as_module(self.t.clone(), true, |k, g| left[k].mul(g))?;
        Ok(HomModule { tb, hom, module })
    }

    pub fn coind_general(&self, k: &Bimodule, l: &Bimodule, n: &Bimodule) -> Result<CoindGeneral> {
        let kb = self.induced_module(k)?;
        if !subgenerated_check(&kb.module, l)? {
            return Err(Error::hypothesis("K (x)_A B is not L-subgenerated"));
        }
        if !subgenerated_check(n, l)? {
            return Err(Error::hypothesis("N is not in sigma[L]"));
        }
        let hom = self.hom_module(n)?;
        let space = trace_sp(k, &hom.module)?;
        let (module, _) = hom.module.submodule(&space)?;
        Ok(CoindGeneral { hom, space, module })
    }

    pub fn can_iso(&self, m: &Bimodule, n: &Bimodule) -> Result<CanIso> {
        self.require_t(m)?;
        let f = m.field();
        let (dm, dt, db) = (m.dim(), self.t.dim(), self.beta.target.dim());
        let id_b = Matrix::identity(f, db);
        let mb = self.induced_module(m)?;
        let source = hom_space(&mb.module.as_right(), &n.as_right(), Side::Right)?;
        let hm = self.hom_module(n)?;
        let target = hom_space(&m.as_right(), &hm.module, Side::Right)?;
        let tbc = &hm.tb.chain;

        // f -> [m_i -> [t (x) b -> f(m_i t (x) b)]]
        let mut direct = Matrix::zeros(f, source.dim(), target.dim());
        for (r, fm) in source.basis_maps().iter().enumerate() {
            let mut g = Matrix::zeros(f, dm, hm.hom.dim());
            for i in 0..dm {
                let mut xi = Matrix::zeros(f, dt, dm);
                for (u, act) in m.right_actions().iter().enumerate() {
                    xi.row_mut(u).copy_from_slice(act.row(i));
                }
                let raw = xi.kron(&id_b).mul(mb.chain.project()).mul(fm);
                let gi = tbc.descend(&raw, "m t (x) b")?;
                g.row_mut(i).copy_from_slice(&hm.hom.coords_or(&gi, "Hom_{-S}(T (x) B, N) element")?);
            }
            direct.row_mut(r).copy_from_slice(&target.coords_or(&g, "image under the canonical map")?);
        }

        // g -> [m (x) b -> g(m)(1 (x) b)]
        let ones: Vec<Vec<u32>> = (0..db).map(|j| tbc.pure(&[self.t.unit(), &vector::unit(db, j)])).collect();
        let mut inverse = Matrix::zeros(f, target.dim(), source.dim());
        for (r, g) in target.basis_maps().iter().enumerate() {
            let mut raw = Matrix::zeros(f, dm * db, n.dim());
            for i in 0..dm {
                let gi = hm.hom.from_coords(g.row(i));
                for (j, one) in ones.iter().enumerate() {
                    raw.row_mut(i * db + j).copy_from_slice(&gi.apply(one));
                }
            }
            let fm = mb.chain.descend(&raw, "g(m)(1 (x) b)")?;
            inverse.row_mut(r).copy_from_slice(&source.coords_or(&fm, "inverse canonical map")?);
        }

        // (M (x)_T T) (x)_A B  ->  M (x)_A B  and  ->  M (x)_T (T (x)_A B)
        let mt = TensorChain::pair(&m.as_right(), &Bimodule::regular(self.t.clone()))?;
        let mu = mt.descend(&act_grid(f, dm, m.right_actions(), &Matrix::identity(f, dt)), "multiplication")?;
        let x1 = self.induced_module(mt.module())?;
        let x2 = TensorChain::pair(&m.as_right(), &hm.tb.module)?;
        let a1 = x1.chain.descend(&mu.kron(&id_b).mul(mb.chain.project()), "(M (x)_T T) (x) B -> M (x) B")?;
        let assoc = mt
            .lift()
            .kron(&id_b)
            .mul(&Matrix::identity(f, dm).kron(tbc.project()))
            .mul(x2.project());
        let a2 = x1.chain.descend(&assoc, "associativity")?;
        let a2_inv = a2
            .inverse()
            .ok_or_else(|| Error::consistency("associativity map is not invertible"))?;
        let h_x1 = hom_space(&x1.module.as_right(), &n.as_right(), Side::Right)?;
        let h_x2 = hom_space(&x2.module().as_right(), &n.as_right(), Side::Right)?;

        let precompose = |from: &HomSpace, to: &HomSpace, a: &Matrix, what: &str| -> Result<Matrix> {
            let mut out = Matrix::zeros(f, from.dim(), to.dim());
            for (r, fm) in from.basis_maps().iter().enumerate() {
                out.row_mut(r).copy_from_slice(&to.coords_or(&a.mul(fm), what)?);
            }
            Ok(out)
        };
        let step1 = precompose(&source, &h_x1, &a1, "step 1")?;
        let step2 = precompose(&h_x1, &h_x2, &a2_inv, "step 2")?;
        let mut step3 = Matrix::zeros(f, h_x2.dim(), target.dim());
        for (r, fm) in h_x2.basis_maps().iter().enumerate() {
            let mut g = Matrix::zeros(f, dm, hm.hom.dim());
            for i in 0..dm {
                let mut e = Matrix::zeros(f, tbc.dim(), x2.dim());
                for y in 0..tbc.dim() {
                    e.row_mut(y).copy_from_slice(&x2.pure(&[&vector::unit(dm, i), &vector::unit(tbc.dim(), y)]));
                }
                g.row_mut(i).copy_from_slice(&hm.hom.coords_or(&e.mul(fm), "step 3 value")?);
            }
            step3.row_mut(r).copy_from_slice(&target.coords_or(&g, "step 3")?);
        }
        Ok(CanIso {
            source,
            target,
            direct,
            inverse,
            steps: [step1, step2, step3],
        })
    }

    /// The full adjunction bijection for `M` in `sigma[K]` and `N` in `sigma[L]`.
    pub fn adjunction(&self, k: &Bimodule, l: &Bimodule, m: &Bimodule, n: &Bimodule) -> Result<GeneralAdjunction> {
        if !subgenerated_check(m, k)? {
            return Err(Error::hypothesis("M is not in sigma[K]"));
        }
        let coind = self.coind_general(k, l, n)?;
        let can = self.can_iso(m, n)?;
        let f = m.field();
        let h4 = hom_space(&m.as_right(), &coind.module, Side::Right)?;
        let mut step4 = Matrix::zeros(f, can.target.dim(), h4.dim());
        for (r, g) in can.target.basis_maps().iter().enumerate() {
            let into = coind
                .space
                .coordinates_of_rows(g)
                .map_err(|_| Error::consistency("a T-linear map out of M leaves the trace"))?;
            step4.row_mut(r).copy_from_slice(&h4.coords_or(&into, "step 4")?);
        }
        Ok(GeneralAdjunction {
            lhs_dim: can.source.dim(),
            rhs_dim: h4.dim(),
            can,
            coind,
            step4,
        })
    }

    /// Condition `theta(k <- xi(s)) = theta(k) <- s` for an injective
    /// `A`-linear `theta : K -> L`, checked on basis elements.
    pub fn comp_condition(&self, k: &Bimodule, l: &Bimodule, theta: &Matrix) -> bool {
        theta.rank() == k.dim()
            && (0..self.s.dim()).all(|j| {
                let xs = k.right_action(self.xi.map.row(j));
                xs.mul(theta) == theta.mul(&l.right_actions()[j])
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn dual_numbers() -> (Arc<Algebra>, SigmaContext) {
        let t = Arc::new(Algebra::truncated_polynomial(f2(), 2));
        let xi = AlgebraMorphism::unit_map(t.clone());
        (t, SigmaContext::over_ground(xi).unwrap())
    }

    #[test]
    fn identity_context_is_identity() {
        let t = Arc::new(Algebra::truncated_polynomial(f2(), 2));
        let ctx = SigmaContext::over_ground(AlgebraMorphism::identity(t.clone())).unwrap();
        let reg = Bimodule::regular(t.clone()).as_right();
        let hm = ctx.hom_module(&reg).unwrap();
        assert_eq!(hm.module.dim(), 2);
        let c = ctx.coind_general(&reg, &reg, &reg).unwrap();
        assert!(c.space.is_full());
    }

    #[test]
    fn hom_functor_doubles_dimension() {
        let (_, ctx) = dual_numbers();
        let n = Bimodule::regular(ctx.s.clone()).as_right();
        let hm = ctx.hom_module(&Bimodule::vector_space(f2(), 3).with_right(ctx.s.clone(), vec![Matrix::identity(f2(), 3)]).unwrap()).unwrap();
        assert_eq!(hm.module.dim(), 6);
        assert!(hm.module.validate().is_ok());
        assert_eq!(ctx.hom_module(&n).unwrap().module.dim(), 2);
    }

    #[test]
    fn coind_of_residue_field() {
        let (t, ctx) = dual_numbers();
        let reg = Bimodule::regular(t.clone()).as_right();
        let (k, _, _) = reg.quotient(&Subspace::span(f2(), 2, &[vec![0, 1]])).unwrap();
        let l = Bimodule::regular(ctx.s.clone()).as_right();
        let c = ctx.coind_general(&k, &l, &l).unwrap();
        assert_eq!(c.hom.module.dim(), 2);
        assert_eq!(c.space.dim(), 1);
    }

    #[test]
    fn can_iso_chain_on_dual_numbers() {
        let (t, ctx) = dual_numbers();
        let reg = Bimodule::regular(t.clone()).as_right();
        let n = Bimodule::regular(ctx.s.clone()).as_right().direct_sum(&Bimodule::regular(ctx.s.clone()).as_right()).unwrap();
        for m in [reg.clone(), reg.direct_sum(&reg).unwrap()] {
            let can = ctx.can_iso(&m, &n).unwrap();
            assert!(can.holds());
        }
        let adj = ctx.adjunction(&reg, &Bimodule::regular(ctx.s.clone()).as_right(), &reg, &n).unwrap();
        assert!(adj.holds());
    }
}
