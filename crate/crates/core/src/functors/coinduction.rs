//! Coinduction `M^D -> M^C` in its comodule versions:
//!
//! * measuring: `N -> Rat^C(Hom_{-S}(T (x)_A B, N))` for a morphism of pairings;
//! * compatible: `N -> Rat^C(Hom_{-*D}(_#C, N))` for a compatible morphism of
//!   corings, with `(f <- g)(h) = f(g -> h)`.

use std::sync::Arc;

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::{hom_space, HomSpace};
use crate::linalg::Matrix;
use crate::module::{Bimodule, Side};
use crate::morphism::CoringMorphism;
use crate::pairing::{MeasuringPairing, PairingMorphism, Rational};
use crate::sharp::SharpSpaces;

use super::general::SigmaContext;
use super::induction::require_target;

/// A coinduced comodule: the rational part of a Hom module.
#[derive(Clone, Debug)]
pub struct Coinduced {
    /// Maps `X -> N`, where `X` is `T (x)_A B` or `_#C`.
    pub hom: HomSpace,
    /// The Hom space as a right module over the source pairing's ring.
    pub module: Bimodule,
    pub rational: Rational,
}

impl Coinduced {
    pub fn comodule(&self) -> &Comodule {
        &self.rational.comodule
    }

    pub fn dim(&self) -> usize {
        self.rational.space.dim()
    }

    /// The map `X -> N` with the given comodule coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        self.hom.from_coords(&self.rational.space.element(coords))
    }

    /// Comodule coordinates of a map `X -> N`, if it is a rational element.
    pub fn coords_of(&self, map: &Matrix) -> Option<Vec<Scalar>> {
        let h = self.hom.coords(map)?;
        self.rational.space.coordinates(&h)
    }
}

/// `Coind(v)` for `v : N -> N'`, by postcomposition.
pub fn coind_map(from: &Coinduced, to: &Coinduced, v: &Matrix) -> Result<Matrix> {
    let f = v.field();
    let mut out = Matrix::zeros(f, from.dim(), to.dim());
    for r in 0..from.dim() {
        let img = from.element(&crate::linalg::vector::unit(from.dim(), r)).mul(v);
        let c = to
            .coords_of(&img)
            .ok_or_else(|| Error::consistency("Coind(v) leaves the rational part"))?;
        out.row_mut(r).copy_from_slice(&c);
    }
    Ok(out)
}

fn require_alpha(p: &MeasuringPairing, which: &str) -> Result<()> {
    if p.alpha.holds() {
        Ok(())
    } else {
        Err(Error::hypothesis(format!("{which} pairing: {}", p.alpha.reason())))
    }
}

/// Coinduction along a morphism of measuring alpha-pairings.
pub fn coind_measuring(pm: &PairingMorphism, n: &Comodule) -> Result<Coinduced> {
    require_alpha(&pm.source, "source")?;
    require_alpha(&pm.target, "target")?;
    pm.validate().into_result()?;
    require_target(&pm.coring_morphism, n)?;
    let ctx = SigmaContext::from_pairing_morphism(pm)?;
    let n_mod = pm.target.module_from_comodule(n)?;
    let hm = ctx.hom_module(&n_mod)?;
    let rational = pm.source.rat(&hm.module)?;
    Ok(Coinduced {
        hom: hm.hom,
        module: hm.module,
        rational,
    })
}

/// Coinduction along a compatible morphism of corings.
#[derive(Clone, Debug)]
pub struct CompatibleCoinduction {
    pub phi: CoringMorphism,
    pub sharp: SharpSpaces,
    /// `_#C` as a `(*C, *D)`-bimodule.
    pub sub: Bimodule,
    /// Basis of `_#C` as maps `C -> B`.
    pub basis_maps: Vec<Matrix>,
    /// `beta . eps_C` in the coordinates of `_#C`.
    pub unit: Vec<Scalar>,
    pub pc: Arc<MeasuringPairing>,
    pub pd: Arc<MeasuringPairing>,
}

impl CompatibleCoinduction {
    pub fn new(phi: &CoringMorphism) -> Result<Self> {
        phi.validate().into_result()?;
        let sharp = SharpSpaces::new(phi)?;
        if !sharp.compatible {
            return Err(Error::hypothesis(sharp.incompatibility()));
        }
        let pc = Arc::new(MeasuringPairing::canonical(phi.source.clone())?);
        let pd = Arc::new(MeasuringPairing::canonical(phi.target.clone())?);
        require_alpha(&pc, "source")?;
        require_alpha(&pd, "target")?;
        let (sub, incl) = sharp.sub_c()?;
        let basis_maps = incl.row_iter().map(|r| sharp.hom.from_coords(r)).collect();
        let u = sharp
            .hom
            .coords_or(&phi.source.eps().mul(&phi.beta.map), "beta . eps_C")?;
        let unit = sharp
            .img_beta
            .coordinates(&u)
            .ok_or_else(|| Error::consistency("beta . eps_C is not in _#C"))?;
        Ok(CompatibleCoinduction {
            phi: phi.clone(),
            sharp,
            sub,
            basis_maps,
            unit,
            pc,
            pd,
        })
    }

    pub fn apply(&self, n: &Comodule) -> Result<Coinduced> {
        require_target(&self.phi, n)?;
        let n_mod = self.pd.module_from_comodule(n)?;
        let hom = hom_space(&self.sub.as_right(), &n_mod, Side::Right)?;
        let left = self.sub.left_actions().to_vec();
        let module = hom.as_module(self.pc.t.clone(), true, |k, g| left[k].mul(g))?;
        let rational = self.pc.rat(&module)?;
        Ok(Coinduced { hom, module, rational })
    }
}

/// `coind_compatible` as a free function.
pub fn coind_compatible(phi: &CoringMorphism, n: &Comodule) -> Result<Coinduced> {
    CompatibleCoinduction::new(phi)?.apply(n)
}

/// Comparison of the coinductions on a morphism over one base with the
/// canonical pairings.
#[derive(Clone, Debug)]
pub struct CoinductionComparison {
    /// `Sp(sigma[C], -)` equals `Rat^C(-)` on the same Hom module.
    pub general_equals_measuring: bool,
    /// Comodule structures on that common subspace agree.
    pub structures_agree: bool,
    /// Transport `Hom(_#C, N) -> Hom(T (x)_A A, N)` restricted to the
    /// rational parts, in comodule coordinates.
    pub transport: Matrix,
    pub transport_is_colinear_iso: bool,
}

impl CoinductionComparison {
    pub fn holds(&self) -> bool {
        self.general_equals_measuring && self.structures_agree && self.transport_is_colinear_iso
    }
}

pub fn compare_coinductions(phi: &CoringMorphism, n: &Comodule) -> Result<CoinductionComparison> {
    let pm = PairingMorphism::canonical(phi.clone())?;
    let meas = coind_measuring(&pm, n)?;
    let compat = CompatibleCoinduction::new(phi)?;
    let comp = compat.apply(n)?;

    let ctx = SigmaContext::from_pairing_morphism(&pm)?;
    let k = pm.source.coring_module();
    let l = pm.target.coring_module();
    let n_mod = pm.target.module_from_comodule(n)?;
    let general = ctx.coind_general(&k, &l, &n_mod)?;
    let general_equals_measuring = general.space == meas.rational.space;
    let structures_agree = general_equals_measuring
        && pm
            .source
            .comodule_from_module(&general.module)
            .map(|c| c.rho() == meas.comodule().rho())
            .unwrap_or(false);

    // j : T (x)_A A -> _#C, t (x) a -> [c -> beta(t(c)) a]
    let f = phi.theta.field();
    let tb = ctx.tb()?;
    let b = phi.target.base();
    let (dt, db) = (pm.source.t.dim(), b.dim());
    let mut raw = Matrix::zeros(f, dt * db, compat.sub.dim());
    for u in 0..dt {
        let tu = pm.source.functional(u).mul(&phi.beta.map);
        for v in 0..db {
            let map = tu.mul(&b.rmul_matrix(&crate::linalg::vector::unit(db, v)));
            let h = compat.sharp.hom.coords_or(&map, "t (x) b in #C")?;
            let c = compat
                .sharp
                .img_beta
                .coordinates(&h)
                .ok_or_else(|| Error::consistency("t (x) b lands outside _#C"))?;
            raw.row_mut(u * db + v).copy_from_slice(&c);
        }
    }
    let j = tb.chain.descend(&raw, "T (x)_A B -> _#C")?;
    let mut transport = Matrix::zeros(f, comp.dim(), meas.dim());
    let mut ok = true;
    for r in 0..comp.dim() {
        let map = j.mul(&comp.element(&crate::linalg::vector::unit(comp.dim(), r)));
        match meas.coords_of(&map) {
            Some(c) => transport.row_mut(r).copy_from_slice(&c),
            None => ok = false,
        }
    }
    let transport_is_colinear_iso = ok
        && comp.dim() == meas.dim()
        && transport.is_invertible()
        && comp.comodule().is_colinear(meas.comodule(), &transport);
    Ok(CoinductionComparison {
        general_equals_measuring,
        structures_agree,
        transport,
        transport_is_colinear_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, AlgebraMorphism};
    use crate::coring::Coring;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn counit_coinduction_of_ground_is_cofree() {
        let g = Arc::new(Coring::grouplike(f2(), 2));
        let phi = CoringMorphism::counit_to_trivial(g);
        let n = Comodule::regular(phi.target.clone());
        let c = coind_compatible(&phi, &n).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.comodule().validate().is_ok());
        let pm = PairingMorphism::canonical(phi.clone()).unwrap();
        assert_eq!(coind_measuring(&pm, &n).unwrap().dim(), 2);
        assert!(compare_coinductions(&phi, &n).unwrap().holds());
    }

    #[test]
    fn identity_coinduction() {
        let g = Arc::new(Coring::grouplike(f2(), 3));
        let phi = CoringMorphism::identity(g.clone());
        let n = Comodule::graded(g, &[0, 2, 2]).unwrap();
        let c = coind_compatible(&phi, &n).unwrap();
        assert_eq!(c.dim(), 3);
        assert!(compare_coinductions(&phi, &n).unwrap().holds());
    }

    #[test]
    fn base_change_is_rejected() {
        let beta = AlgebraMorphism::unit_map(Arc::new(Algebra::f4()));
        let phi = CoringMorphism::base_change(beta);
        let n = Comodule::regular(phi.target.clone());
        let err = coind_compatible(&phi, &n).unwrap_err();
        assert!(err.to_string().starts_with("not compatible"), "{err}");
    }
}
