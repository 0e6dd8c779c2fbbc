//! The adjunction `- (x)_A B -| Coind` for a compatible coring morphism,
//! the Hom isomorphisms for ad-induction, and the comparison `tau_N` between
//! coinduction and ad-induction.
//!
//! * `Phi(k)(m)(h) = k(sum m0 (x) h(m1))`
//! * `Psi(z)(m (x) b) = z(m)(beta . eps_C) b`
//! * `forward(f)(m) = sum f(m0 (x) 1) (x) (1 (x) m1)`
//! * `backward(g)(m (x) b) = collapse(g(m)) b`

use crate::comodule::{hom_colinear, Comodule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::morphism::CoringMorphism;
use crate::tensor::act_grid;

use super::coinduction::{coind_map, Coinduced, CompatibleCoinduction};
use super::cotensor::{AdInduction, CotensorComodule};
use super::induction::{induction, induction_map, require_source, Induced};

/// `Phi`, `Psi` and their verdicts on one pair `(M, N)`.
#[derive(Clone, Debug)]
pub struct AdjunctionWitness {
    /// `dim Hom^D(M (x)_A B, N) x dim Hom^C(M, Coind N)`.
    pub phi_matrix: Matrix,
    pub psi_matrix: Matrix,
    pub left_dim: usize,
    pub right_dim: usize,
    /// Every `Phi(k)` and `Psi(z)` is colinear.
    pub colinear: bool,
    pub mutually_inverse: bool,
}

impl AdjunctionWitness {
    pub fn holds(&self) -> bool {
        self.colinear && self.mutually_inverse
    }
}

/// The two sides of the adjunction at a fixed `(M, N)`.
#[derive(Clone, Debug)]
pub struct AdjunctionPair {
    pub m: Comodule,
    pub n: Comodule,
    pub ind: Induced,
    pub coind: Coinduced,
}

impl CompatibleCoinduction {
    pub fn pair(&self, m: &Comodule, n: &Comodule) -> Result<AdjunctionPair> {
        require_source(&self.phi, m)?;
        Ok(AdjunctionPair {
            m: m.clone(),
            n: n.clone(),
            ind: induction(&self.phi, m)?,
            coind: self.apply(n)?,
        })
    }

    /// `Phi(k)` as a `dim M x dim Coind(N)` matrix; `k : M (x)_A B -> N`.
    pub fn adjunction_phi(&self, p: &AdjunctionPair, kappa: &Matrix) -> Result<Matrix> {
        let f = kappa.field();
        let dm = p.m.dim();
        let rho = p.m.rho_raw();
        let id = Matrix::identity(f, dm);
        let g: Vec<Matrix> = self
            .basis_maps
            .iter()
            .map(|h| rho.mul(&id.kron(h)).mul(p.ind.chain.project()).mul(kappa))
            .collect();
        let mut out = Matrix::zeros(f, dm, p.coind.dim());
        for i in 0..dm {
            let mut map = Matrix::zeros(f, g.len(), p.n.dim());
            for (a, ga) in g.iter().enumerate() {
                map.row_mut(a).copy_from_slice(ga.row(i));
            }
            let c = p
                .coind
                .coords_of(&map)
                .ok_or_else(|| Error::consistency(format!("Phi(k)(m_{i}) is not in Coind(N)")))?;
            out.row_mut(i).copy_from_slice(&c);
        }
        Ok(out)
    }

    /// `Psi(z)` as a `dim(M (x)_A B) x dim N` matrix; `z : M -> Coind(N)`.
    pub fn adjunction_psi(&self, p: &AdjunctionPair, zeta: &Matrix) -> Result<Matrix> {
        let f = zeta.field();
        let racts = p.n.carrier().right_actions();
        let db = racts.len();
        let mut raw = Matrix::zeros(f, p.m.dim() * db, p.n.dim());
        for i in 0..p.m.dim() {
            let ni = p.coind.element(zeta.row(i)).apply(&self.unit);
            for (j, r) in racts.iter().enumerate() {
                raw.row_mut(i * db + j).copy_from_slice(&r.apply(&ni));
            }
        }
        p.ind.chain.descend(&raw, "Psi(z)")
    }

    pub fn witness(&self, m: &Comodule, n: &Comodule) -> Result<AdjunctionWitness> {
        let p = self.pair(m, n)?;
        self.witness_for(&p)
    }

    pub fn witness_for(&self, p: &AdjunctionPair) -> Result<AdjunctionWitness> {
        let f = p.n.carrier().field();
        let hl = hom_colinear(&p.ind.comodule, &p.n)?;
        let hr = hom_colinear(&p.m, p.coind.comodule())?;
        let (dl, dr) = (hl.dim(), hr.dim());
        let mut colinear = true;
        let mut phi_matrix = Matrix::zeros(f, dl, dr);
        for (r, k) in hl.basis_maps().iter().enumerate() {
            match hr.coords(&self.adjunction_phi(p, k)?) {
                Some(c) => phi_matrix.row_mut(r).copy_from_slice(&c),
                None => colinear = false,
            }
        }
        let mut psi_matrix = Matrix::zeros(f, dr, dl);
        for (r, z) in hr.basis_maps().iter().enumerate() {
            match hl.coords(&self.adjunction_psi(p, z)?) {
                Some(c) => psi_matrix.row_mut(r).copy_from_slice(&c),
                None => colinear = false,
            }
        }
        let mutually_inverse = colinear
            && dl == dr
            && phi_matrix.mul(&psi_matrix) == Matrix::identity(f, dl)
            && psi_matrix.mul(&phi_matrix) == Matrix::identity(f, dr);
        Ok(AdjunctionWitness {
            phi_matrix,
            psi_matrix,
            left_dim: dl,
            right_dim: dr,
            colinear,
            mutually_inverse,
        })
    }

    /// `Phi(Ind(u) k v) = u Phi(k) Coind(v)` for `u : M' -> M`, `v : N -> N'`
    /// and every basis `k` of `Hom^D(M (x)_A B, N)`.
    pub fn naturality(&self, src: &AdjunctionPair, dst: &AdjunctionPair, u: &Matrix, v: &Matrix) -> Result<bool> {
        // src = (M, N), dst = (M', N')
        let ind_u = induction_map(&dst.ind, &src.ind, u);
        let coind_v = coind_map(&src.coind, &dst.coind, v)?;
        for k in hom_colinear(&src.ind.comodule, &src.n)?.basis_maps() {
            let lhs = self.adjunction_phi(dst, &ind_u.mul(&k).mul(v))?;
            let rhs = u.mul(&self.adjunction_phi(src, &k)?).mul(&coind_v);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Hom isomorphisms `Hom^D(M (x)_A B, N) = Hom^C(M, N []_D (B (x)_A C))`.
#[derive(Clone, Debug)]
pub struct AdHom {
    pub ad: AdInduction,
    embedding: Matrix,
    collapse: Matrix,
}

impl AdHom {
    pub fn new(phi: &CoringMorphism) -> Result<Self> {
        let ad = AdInduction::new(phi)?;
        let embedding = ad.embedding()?;
        let collapse = ad.collapse()?;
        Ok(AdHom { ad, embedding, collapse })
    }

    /// `forward(f)`, `dim M x dim(N [] X)`; `f : M (x)_A B -> N`.
    pub fn forward(&self, m: &Comodule, ind: &Induced, out: &CotensorComodule, g: &Matrix) -> Result<Matrix> {
        let raw = m.rho_raw().mul(&ind.unit.mul(g).kron(&self.embedding));
        let proj = raw.mul(out.cotensor.chain.project());
        let f = g.field();
        let mut res = Matrix::zeros(f, m.dim(), out.comodule.dim());
        for i in 0..m.dim() {
            let c = out
                .cotensor
                .space
                .coordinates(proj.row(i))
                .ok_or_else(|| Error::consistency(format!("forward(f)(m_{i}) is not in the cotensor")))?;
            res.row_mut(i).copy_from_slice(&c);
        }
        Ok(res)
    }

    /// `backward(g)`, `dim(M (x)_A B) x dim N`; `g : M -> N [] X`.
    pub fn backward(&self, n: &Comodule, ind: &Induced, out: &CotensorComodule, g: &Matrix) -> Result<Matrix> {
        let f = g.field();
        let racts = n.carrier().right_actions();
        let grid = act_grid(f, n.dim(), racts, &self.collapse);
        let col = out.cotensor.chain.descend(&grid, "collapse on N (x)_B X")?;
        let base = g.mul(&out.inclusion).mul(&col);
        let db = racts.len();
        let dm = g.rows();
        let mut raw = Matrix::zeros(f, dm * db, n.dim());
        for i in 0..dm {
            for (j, r) in racts.iter().enumerate() {
                raw.row_mut(i * db + j).copy_from_slice(&r.apply(base.row(i)));
            }
        }
        ind.chain.descend(&raw, "backward(g)")
    }

    /// Forward and backward are mutually inverse on the two colinear Hom spaces.
    pub fn round_trip(&self, m: &Comodule, n: &Comodule) -> Result<bool> {
        let ind = induction(&self.ad.phi, m)?;
        let out = self.ad.apply(n)?;
        let hl = hom_colinear(&ind.comodule, n)?;
        let hr = hom_colinear(m, &out.comodule)?;
        if hl.dim() != hr.dim() {
            return Ok(false);
        }
        for k in hl.basis_maps() {
            let g = self.forward(m, &ind, &out, &k)?;
            if hr.coords(&g).is_none() || self.backward(n, &ind, &out, &g)? != k {
                return Ok(false);
            }
        }
        for g in hr.basis_maps() {
            let k = self.backward(n, &ind, &out, &g)?;
            if hl.coords(&k).is_none() || self.forward(m, &ind, &out, &k)? != g {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `tau_N : Coind(N) -> N []_D (B (x)_A C)` for one instance.
#[derive(Clone, Debug)]
pub struct TauInstance {
    pub coind: Coinduced,
    pub cotensor: CotensorComodule,
    pub tau: Matrix,
    pub colinear: bool,
    pub invertible: bool,
}

impl TauInstance {
    pub fn holds(&self) -> bool {
        self.colinear && self.invertible
    }
}

/// A naturality square `Coind(f) tau_N' = tau_N (f [] id)`.
#[derive(Clone, Debug)]
pub struct NaturalitySquare {
    pub from: usize,
    pub to: usize,
    pub commutes: bool,
}

#[derive(Clone, Debug)]
pub struct NaturalIsoReport {
    pub instances: Vec<TauInstance>,
    pub squares: Vec<NaturalitySquare>,
}

impl NaturalIsoReport {
    pub fn holds(&self) -> bool {
        self.instances.iter().all(TauInstance::holds) && self.squares.iter().all(|s| s.commutes)
    }
}

/// `tau_N = forward(Psi(id))`.
pub fn tau(co: &CompatibleCoinduction, ad: &AdHom, n: &Comodule) -> Result<TauInstance> {
    let coind = co.apply(n)?;
    let m = coind.comodule().clone();
    let p = co.pair(&m, n)?;
    let id = Matrix::identity(n.carrier().field(), m.dim());
    let psi = co.adjunction_psi(&p, &id)?;
    let cotensor = ad.ad.apply(n)?;
    let tau = ad.forward(&m, &p.ind, &cotensor, &psi)?;
    let colinear = m.is_colinear(&cotensor.comodule, &tau);
    let invertible = m.dim() == cotensor.comodule.dim() && tau.is_invertible();
    Ok(TauInstance {
        coind: p.coind,
        cotensor,
        tau,
        colinear,
        invertible,
    })
}

/// `tau_N` for every `N` and the naturality square for every `(i, j, f)`,
/// `f : N_i -> N_j` colinear.
pub fn verify_natural_iso(phi: &CoringMorphism, ns: &[Comodule], maps: &[(usize, usize, Matrix)]) -> Result<NaturalIsoReport> {
    let co = CompatibleCoinduction::new(phi)?;
    let ad = AdHom::new(phi)?;
    let instances = ns.iter().map(|n| tau(&co, &ad, n)).collect::<Result<Vec<_>>>()?;
    let mut squares = Vec::new();
    for (i, j, f) in maps {
        let (a, b) = (&instances[*i], &instances[*j]);
        if !ns[*i].is_colinear(&ns[*j], f) {
            return Err(Error::hypothesis(format!("map {i} -> {j} is not colinear")));
        }
        let cf = coind_map(&a.coind, &b.coind, f)?;
        let bf = ad.ad.map(&a.cotensor, &b.cotensor, f)?;
        squares.push(NaturalitySquare {
            from: *i,
            to: *j,
            commutes: cf.mul(&b.tau) == a.tau.mul(&bf),
        });
    }
    Ok(NaturalIsoReport { instances, squares })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::coring::Coring;
    use crate::field::Fp;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn grouplike_counit_round_trips() {
        let g = Arc::new(Coring::grouplike(f2(), 2));
        let phi = CoringMorphism::counit_to_trivial(g.clone());
        let co = CompatibleCoinduction::new(&phi).unwrap();
        let n = Comodule::regular(phi.target.clone());
        for grades in [vec![0], vec![0, 1], vec![1, 1, 0]] {
            let m = Comodule::graded(g.clone(), &grades).unwrap();
            let w = co.witness(&m, &n).unwrap();
            assert!(w.holds(), "{grades:?}");
            assert_eq!(w.left_dim, grades.len());
        }
    }

    #[test]
    fn identity_phi_of_identification_is_coaction() {
        let g = Arc::new(Coring::grouplike(f2(), 2));
        let phi = CoringMorphism::identity(g.clone());
        let co = CompatibleCoinduction::new(&phi).unwrap();
        let m = Comodule::graded(g, &[0, 1]).unwrap();
        let p = co.pair(&m, &m).unwrap();
        // the identification M (x)_A A -> M inverts the unit
        let kappa = p.ind.unit.inverse().unwrap();
        let out = co.adjunction_phi(&p, &kappa).unwrap();
        assert!(out.is_invertible());
        assert!(m.is_colinear(p.coind.comodule(), &out));
        assert_eq!(co.adjunction_psi(&p, &out).unwrap(), kappa);
    }

    #[test]
    fn tau_on_grouplike_counit() {
        let g = Arc::new(Coring::grouplike(f2(), 2));
        let phi = CoringMorphism::counit_to_trivial(g);
        let n = Comodule::regular(phi.target.clone());
        let two = n.direct_sum(&n).unwrap();
        let incl = Matrix::from_rows(f2(), 2, &[vec![1, 0]]);
        let r = verify_natural_iso(&phi, &[n, two], &[(0, 1, incl)]).unwrap();
        assert!(r.holds());
        assert_eq!(r.instances[0].coind.dim(), 2);
        assert_eq!(r.instances[1].coind.dim(), 4);
    }

    #[test]
    fn ad_hom_round_trip_on_identity() {
        let g = Arc::new(Coring::grouplike(f2(), 3));
        let phi = CoringMorphism::identity(g.clone());
        let ad = AdHom::new(&phi).unwrap();
        let m = Comodule::graded(g.clone(), &[0, 1]).unwrap();
        let n = Comodule::graded(g, &[1, 2, 1]).unwrap();
        assert!(ad.round_trip(&m, &n).unwrap());
    }
}
