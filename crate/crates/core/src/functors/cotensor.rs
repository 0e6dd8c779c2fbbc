//! Cotensor products, bicomodules and the ad-induction functor
//! `- []_D (B (x)_A C) : M^D -> M^C`.

use crate::comodule::{Comodule, LeftComodule};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, vector, Matrix, Subspace};
use crate::module::{Bimodule, Side};
use crate::morphism::CoringMorphism;
use crate::report::Validation;
use crate::tensor::TensorChain;
use crate::trace::left_projectivity_test;

/// `M []_D N` inside `M (x)_B N`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    /// `M (x)_B N`.
    pub chain: TensorChain,
    /// `rho_M (x) id - id (x) lambda_N` on `M (x)_B N`.
    pub varpi: Matrix,
    pub space: Subspace,
}

impl Cotensor {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn cotensor(m: &Comodule, n: &LeftComodule) -> Result<Cotensor> {
    if m.coring() != n.coring() {
        return Err(Error::CoringMismatch("cotensor of comodules over different corings".into()));
    }
    let d = m.coring();
    let f = d.field();
    let chain = TensorChain::pair(m.carrier(), n.carrier())?;
    let mdn = TensorChain::new(vec![m.carrier().clone(), d.carrier().clone(), n.carrier().clone()])?;
    let left = m.rho_raw().kron(&Matrix::identity(f, n.dim()));
    let right = Matrix::identity(f, m.dim()).kron(&n.lambda_raw());
    let varpi = chain.descend(&left.sub(&right).mul(mdn.project()), "cotensor equalizer")?;
    let space = kernel_basis(&varpi);
    Ok(Cotensor { chain, varpi, space })
}

/// `v (x) w` restricted to the cotensor subspaces; `None` if it leaves them.
pub fn cotensor_map(from: &Cotensor, to: &Cotensor, v: &Matrix, w: &Matrix) -> Option<Matrix> {
    let full = from.chain.induced_unchecked(&to.chain, &[v, w]);
    to.space.coordinates_of_rows(&from.space.basis().mul(&full)).ok()
}

/// A `(D, C)`-bicomodule: left `D`- and right `C`-coactions on one carrier.
#[derive(Clone, Debug)]
pub struct Bicomodule {
    pub left: LeftComodule,
    pub right: Comodule,
}

impl Bicomodule {
    pub fn new(left: LeftComodule, right: Comodule) -> Result<Self> {
        if left.carrier() != right.carrier() {
            return Err(Error::dims("bicomodule: the two coactions live on different carriers"));
        }
        Ok(Bicomodule { left, right })
    }

    pub fn carrier(&self) -> &Bimodule {
        self.right.carrier()
    }

    pub fn dim(&self) -> usize {
        self.right.dim()
    }

    /// `B (x)_A C` with `b (x) c -> sum b theta(c1) (x) c2` and
    /// `b (x) c -> sum b (x) c1 (x) c2`.
    pub fn base_change(phi: &CoringMorphism) -> Result<Self> {
        let (c, d) = (&phi.source, &phi.target);
        let b = d.base();
        let f = c.field();
        let b_ba = Bimodule::regular(b.clone()).restrict(&phi.beta, Side::Right)?;
        let x = TensorChain::pair(&b_ba, c.carrier())?;
        let (db, dc) = (b.dim(), c.dim());
        let dl = c.delta_raw();

        // c_v -> 1 (x) c_v
        let mut w = Matrix::zeros(f, dc, x.dim());
        for v in 0..dc {
            w.row_mut(v).copy_from_slice(&x.pure(&[b.unit(), &vector::unit(dc, v)]));
        }
        let dx = TensorChain::pair(d.carrier(), x.module())?;
        let xc = TensorChain::pair(x.module(), c.carrier())?;
        let mut lraw = Matrix::zeros(f, db * dc, dx.raw_dim());
        let mut rraw = Matrix::zeros(f, db * dc, xc.raw_dim());
        for j in 0..db {
            let left_b = phi.theta.mul(&d.carrier().left_actions()[j]);
            let limg = dl.mul(&left_b.kron(&w));
            let mut y = Matrix::zeros(f, dc, x.dim());
            for u in 0..dc {
                y.row_mut(u).copy_from_slice(&x.pure(&[&vector::unit(db, j), &vector::unit(dc, u)]));
            }
            let rimg = dl.mul(&y.kron(&Matrix::identity(f, dc)));
            for i in 0..dc {
                lraw.row_mut(j * dc + i).copy_from_slice(limg.row(i));
                rraw.row_mut(j * dc + i).copy_from_slice(rimg.row(i));
            }
        }
        let lambda = x.descend(&lraw.mul(dx.project()), "left D-coaction on B (x) C")?;
        let rho = x.descend(&rraw.mul(xc.project()), "right C-coaction on B (x) C")?;
        let left = LeftComodule::new(d.clone(), x.module().clone(), lambda)?;
        let right = Comodule::new(c.clone(), x.module().clone(), rho)?;
        Bicomodule::new(left, right)
    }

    /// `C` with `(theta (x) id) Delta` on the left, for a morphism over one base.
    pub fn coring_over(phi: &CoringMorphism) -> Result<Self> {
        if !phi.is_same_base() {
            return Err(Error::hypothesis("C is a (D, C)-bicomodule only over a common base"));
        }
        let c = &phi.source;
        let f = c.field();
        let raw = c.delta_raw().mul(&phi.theta.kron(&Matrix::identity(f, c.dim())));
        let left = LeftComodule::from_raw(phi.target.clone(), c.carrier().clone(), &raw)?;
        Bicomodule::new(left, Comodule::regular(c.clone()))
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("bicomodule");
        v.merge(self.left.validate());
        v.merge(self.right.validate());
        if !v.is_ok() {
            return v;
        }
        let x = self.carrier();
        let (d, c) = (self.left.coring(), self.right.coring());
        let f = x.field();
        let dxc = match TensorChain::new(vec![d.carrier().clone(), x.clone(), c.carrier().clone()]) {
            Ok(t) => t,
            Err(e) => {
                v.check(false, || e.to_string());
                return v;
            }
        };
        let lr = self.left.lambda_raw().mul(&Matrix::identity(f, d.dim()).kron(&self.right.rho_raw()));
        let rl = self.right.rho_raw().mul(&self.left.lambda_raw().kron(&Matrix::identity(f, c.dim())));
        let (lhs, rhs) = (lr.mul(dxc.project()), rl.mul(dxc.project()));
        for i in 0..x.dim() {
            v.check(lhs.row(i) == rhs.row(i), || format!("left and right coactions do not commute at x_{i}"));
        }
        v
    }
}

/// `M []_D X` as a right `C`-comodule via `id (x) rho_X`.
#[derive(Clone, Debug)]
pub struct CotensorComodule {
    pub cotensor: Cotensor,
    pub comodule: Comodule,
    /// Basis of the cotensor in `M (x)_B X` coordinates.
    pub inclusion: Matrix,
}

pub fn cotensor_comodule(m: &Comodule, x: &Bicomodule) -> Result<CotensorComodule> {
    let cot = cotensor(m, &x.left)?;
    let c = x.right.coring();
    let f = c.field();
    let mxc = TensorChain::new(vec![m.carrier().clone(), x.carrier().clone(), c.carrier().clone()])?;
    let raw = Matrix::identity(f, m.dim()).kron(&x.right.rho_raw()).mul(mxc.project());
    let rho = cot.chain.descend(&raw, "id (x) rho_X")?;
    let ambient = Comodule::new(c.clone(), cot.chain.module().clone(), rho)?;
    let (comodule, inclusion) = ambient.restrict(&cot.space)?;
    Ok(CotensorComodule {
        cotensor: cot,
        comodule,
        inclusion,
    })
}

/// The regime in which the comodule-side functors are run: `C` projective as
/// a left `A`-module (so flat, so every purity condition holds).
pub fn require_regime(c: &Coring) -> Result<()> {
    if left_projectivity_test(c.carrier())?.projective {
        Ok(())
    } else {
        Err(Error::hypothesis("C is not projective as a left module over its base"))
    }
}

/// Ad-induction context: the bicomodule `B (x)_A C` of a coring morphism.
#[derive(Clone, Debug)]
pub struct AdInduction {
    pub phi: CoringMorphism,
    pub x: Bicomodule,
}

impl AdInduction {
    pub fn new(phi: &CoringMorphism) -> Result<Self> {
        require_regime(&phi.source)?;
        Ok(AdInduction {
            phi: phi.clone(),
            x: Bicomodule::base_change(phi)?,
        })
    }

    pub fn apply(&self, n: &Comodule) -> Result<CotensorComodule> {
        super::induction::require_target(&self.phi, n)?;
        cotensor_comodule(n, &self.x)
    }

    /// `v []_D id` in the coordinates of the two outputs.
    pub fn map(&self, from: &CotensorComodule, to: &CotensorComodule, v: &Matrix) -> Result<Matrix> {
        let id = Matrix::identity(v.field(), self.x.dim());
        cotensor_map(&from.cotensor, &to.cotensor, v, &id)
            .ok_or_else(|| Error::consistency("v [] id leaves the cotensor"))
    }

    fn x_chain(&self) -> Result<TensorChain> {
        let b = self.phi.target.base();
        TensorChain::pair(&Bimodule::regular(b.clone()).restrict(&self.phi.beta, Side::Right)?, self.phi.source.carrier())
    }

    /// `C -> X`, `c -> 1 (x) c`.
    pub fn embedding(&self) -> Result<Matrix> {
        let c = &self.phi.source;
        let b = self.phi.target.base();
        let xchain = self.x_chain()?;
        let mut w = Matrix::zeros(c.field(), c.dim(), xchain.dim());
        for v in 0..c.dim() {
            w.row_mut(v).copy_from_slice(&xchain.pure(&[b.unit(), &vector::unit(c.dim(), v)]));
        }
        Ok(w)
    }

    /// `X -> B`, `b (x) c -> b beta(eps(c))`.
    pub fn collapse(&self) -> Result<Matrix> {
        let c = &self.phi.source;
        let b = self.phi.target.base();
        let f = c.field();
        let xchain = self.x_chain()?;
        let beps = c.eps().mul(&self.phi.beta.map);
        let mut raw = Matrix::zeros(f, b.dim() * c.dim(), b.dim());
        for j in 0..b.dim() {
            let img = beps.mul(&b.lmul_matrix(&vector::unit(b.dim(), j)));
            for u in 0..c.dim() {
                raw.row_mut(j * c.dim() + u).copy_from_slice(img.row(u));
            }
        }
        xchain.descend(&raw, "collapse")
    }
}

/// `ad_induction` as a free function.
pub fn ad_induction(phi: &CoringMorphism, n: &Comodule) -> Result<CotensorComodule> {
    AdInduction::new(phi)?.apply(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::algebra::Algebra;
    use crate::field::Fp;
    use crate::linalg::enumerate_vectors;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn grouplike() -> Arc<Coring> {
        Arc::new(Coring::grouplike(f2(), 2))
    }

    #[test]
    fn graded_cotensor_dimension() {
        let g = grouplike();
        let m = Comodule::graded(g.clone(), &[0, 1]).unwrap();
        let n = LeftComodule::graded(g, &[0, 0, 1]).unwrap();
        let cot = cotensor(&m, &n).unwrap();
        assert_eq!(cot.varpi.rows(), 6);
        assert_eq!(cot.varpi.cols(), 12);
        assert_eq!(cot.dim(), 3);
        // exhaustive check over F_2 of the equalizer
        let hits = enumerate_vectors(2, 6).into_iter().filter(|x| cot.varpi.apply(x).iter().all(|&v| v == 0)).count();
        assert_eq!(hits, 8);
    }

    #[test]
    fn cotensor_with_coring_is_the_comodule() {
        let g = grouplike();
        let m = Comodule::graded(g.clone(), &[0, 1, 1]).unwrap();
        let cot = cotensor(&m, &LeftComodule::regular(g)).unwrap();
        assert_eq!(cot.dim(), m.dim());
        // rho_M lands in the cotensor
        let img = Subspace::row_space(m.rho());
        assert_eq!(img, cot.space);
    }

    #[test]
    fn trivial_coring_cotensor_is_everything() {
        let a = Arc::new(Algebra::truncated_polynomial(f2(), 2));
        let t = Arc::new(Coring::trivial(a));
        let m = Comodule::regular(t.clone());
        let n = LeftComodule::regular(t);
        let cot = cotensor(&m, &n).unwrap();
        assert!(cot.space.is_full());
    }

    #[test]
    fn base_change_bicomodule_validates() {
        let g = grouplike();
        let phi = CoringMorphism::counit_to_trivial(g.clone());
        let x = Bicomodule::base_change(&phi).unwrap();
        assert!(x.validate().is_ok(), "{}", x.validate().summary());
        let same = Bicomodule::coring_over(&phi).unwrap();
        assert!(same.validate().is_ok(), "{}", same.validate().summary());
        let sw = Arc::new(Coring::sweedler(Arc::new(Algebra::f4())));
        let x = Bicomodule::base_change(&CoringMorphism::counit_to_trivial(sw)).unwrap();
        assert!(x.validate().is_ok(), "{}", x.validate().summary());
    }

    #[test]
    fn ad_induction_of_ground_is_cofree() {
        let g = grouplike();
        let phi = CoringMorphism::counit_to_trivial(g.clone());
        let n = Comodule::regular(phi.target.clone());
        let out = ad_induction(&phi, &n).unwrap();
        assert_eq!(out.comodule.dim(), 2);
        assert!(out.comodule.validate().is_ok());
        // D []_D X = X
        let id = ad_induction(&CoringMorphism::identity(g.clone()), &Comodule::graded(g, &[1, 0]).unwrap()).unwrap();
        assert_eq!(id.comodule.dim(), 2);
    }
}
