//! Right and left comodules over a coring, colinear maps, subcomodules and
//! quotients.

use std::sync::Arc;

use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::hom::{constrained_hom, HomSpace};
use crate::linalg::{expect_shape, Matrix, Subspace};
use crate::module::Bimodule;
use crate::report::Validation;
use crate::tensor::{act_grid, twist, TensorChain};

/// Right `C`-comodule. The carrier's right algebra is the base of `C`; its
/// left side is free (so bicomodules reuse this type).
#[derive(Clone, Debug)]
pub struct Comodule {
    coring: Arc<Coring>,
    carrier: Bimodule,
    mc: TensorChain,
    rho: Matrix,
}

impl Comodule {
    /// `rho` in quotient coordinates of `M (x)_A C`.
    pub fn new(coring: Arc<Coring>, carrier: Bimodule, rho: Matrix) -> Result<Self> {
        let mc = TensorChain::pair(&carrier, coring.carrier())
            .map_err(|_| Error::CoringMismatch("comodule carrier is not a right module over the coring base".into()))?;
        expect_shape(&rho, carrier.dim(), mc.dim(), "coaction")?;
        Ok(Comodule {
            coring,
            carrier,
            mc,
            rho,
        })
    }

    /// `rho_raw` lands in the raw grid of `M (x)_R C`.
    pub fn from_raw(coring: Arc<Coring>, carrier: Bimodule, rho_raw: &Matrix) -> Result<Self> {
        let mc = TensorChain::pair(&carrier, coring.carrier())?;
        expect_shape(rho_raw, carrier.dim(), mc.raw_dim(), "raw coaction")?;
        let rho = rho_raw.mul(mc.project());
        Ok(Comodule {
            coring,
            carrier,
            mc,
            rho,
        })
    }

    /// `C` itself with `rho = Delta`.
    pub fn regular(coring: Arc<Coring>) -> Self {
        let carrier = coring.carrier().clone();
        let rho = coring.delta().clone();
        Comodule::new(coring, carrier, rho).expect("Delta has the right shape")
    }

    /// Comodule over a grouplike coring on a graded space: basis vector `i`
    /// lies in grade `grades[i]`.
    pub fn graded(coring: Arc<Coring>, grades: &[usize]) -> Result<Self> {
        let f = coring.field();
        let n = grades.len();
        let g = coring.dim();
        let carrier = Bimodule::vector_space(f, n).with_right(
            coring.base().clone(),
            vec![Matrix::identity(f, n); coring.base().dim()],
        )?;
        let mut raw = Matrix::zeros(f, n, n * g);
        for (i, &gr) in grades.iter().enumerate() {
            if gr >= g {
                return Err(Error::dims(format!("grade {gr} out of range")));
            }
            raw.set(i, i * g + gr, 1);
        }
        Comodule::from_raw(coring, carrier, &raw)
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    /// `M (x)_A C`.
    pub fn mc(&self) -> &TensorChain {
        &self.mc
    }

    pub fn rho_raw(&self) -> Matrix {
        self.rho.mul(self.mc.lift())
    }

    /// Raw map `(i, c) -> m_i . eps(c)`.
    pub fn counit_grid(&self) -> Matrix {
        act_grid(self.carrier.field(), self.dim(), self.carrier.right_actions(), self.coring.eps())
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("comodule");
        let f = self.carrier.field();
        v.merge(self.carrier.validate());
        let mc_mod = self.mc.module();
        for (k, (a, b)) in self.carrier.right_actions().iter().zip(mc_mod.right_actions()).enumerate() {
            v.check(a.mul(&self.rho) == self.rho.mul(b), || format!("coaction is not right A-linear at e_{k}"));
        }
        for (k, (a, b)) in self.carrier.left_actions().iter().zip(mc_mod.left_actions()).enumerate() {
            v.check(a.mul(&self.rho) == self.rho.mul(b), || format!("coaction is not left linear at e_{k}"));
        }
        if !v.is_ok() {
            return v;
        }
        let mcc = match TensorChain::new(vec![
            self.carrier.clone(),
            self.coring.carrier().clone(),
            self.coring.carrier().clone(),
        ]) {
            Ok(c) => c,
            Err(e) => {
                v.check(false, || e.to_string());
                return v;
            }
        };
        let rr = self.rho_raw();
        let id_m = Matrix::identity(f, self.dim());
        let id_c = Matrix::identity(f, self.coring.dim());
        let lhs = rr.mul(&rr.kron(&id_c)).mul(mcc.project());
        let rhs = rr.mul(&id_m.kron(&self.coring.delta_raw())).mul(mcc.project());
        let counit = rr.mul(&self.counit_grid());
        for i in 0..self.dim() {
            v.check(lhs.row(i) == rhs.row(i), || format!("coassociativity fails at m_{i}"));
            v.check(counit.row(i) == id_m.row(i), || format!("counit law fails at m_{i}"));
        }
        v
    }

    /// Is the subspace a subcomodule (A-stable with `rho(S) <= S (x) C`)?
    pub fn restrict(&self, s: &Subspace) -> Result<(Comodule, Matrix)> {
        let (sub, incl) = self.carrier.submodule(s)?;
        let sc = TensorChain::pair(&sub, self.coring.carrier())?;
        let id_c = Matrix::identity(self.carrier.field(), self.coring.dim());
        let incl_sc = sc.induced_unchecked(&self.mc, &[&incl, &id_c]);
        if incl_sc.rank() != sc.dim() {
            return Err(Error::consistency("S (x) C -> M (x) C is not injective"));
        }
        let targets = incl.mul(&self.rho);
        let mut rho = Matrix::zeros(self.carrier.field(), sub.dim(), sc.dim());
        for r in 0..sub.dim() {
            let x = incl_sc
                .solve_left(targets.row(r))
                .ok_or_else(|| Error::hypothesis(format!("subspace is not a subcomodule (basis vector {r})")))?;
            rho.row_mut(r).copy_from_slice(&x);
        }
        Ok((
            Comodule {
                coring: self.coring.clone(),
                carrier: sub,
                mc: sc,
                rho,
            },
            incl,
        ))
    }

    /// Quotient by a subcomodule; returns the quotient and the projection.
    pub fn quotient(&self, s: &Subspace) -> Result<(Comodule, Matrix)> {
        self.restrict(s)?;
        let (q, proj, lift) = self.carrier.quotient(s)?;
        let qc = TensorChain::pair(&q, self.coring.carrier())?;
        let id_c = Matrix::identity(q.field(), self.coring.dim());
        let proj_qc = self.mc.induced_unchecked(&qc, &[&proj, &id_c]);
        let rho = lift.mul(&self.rho).mul(&proj_qc);
        Ok((
            Comodule {
                coring: self.coring.clone(),
                carrier: q,
                mc: qc,
                rho,
            },
            proj,
        ))
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.coring != other.coring {
            return Err(Error::CoringMismatch("direct sum".into()));
        }
        let carrier = self.carrier.direct_sum(&other.carrier)?;
        let f = carrier.field();
        let n = self.coring.dim();
        let (a, b) = (self.dim(), other.dim());
        let mut raw = Matrix::zeros(f, a + b, (a + b) * n);
        let (ra, rb) = (self.rho_raw(), other.rho_raw());
        for i in 0..a {
            raw.row_mut(i)[..a * n].copy_from_slice(ra.row(i));
        }
        for i in 0..b {
            raw.row_mut(a + i)[a * n..].copy_from_slice(rb.row(i));
        }
        Comodule::from_raw(self.coring.clone(), carrier, &raw)
    }

    /// Matrix of `f (x) id_C : M (x) C -> N (x) C`.
    pub fn tensor_map(&self, other: &Comodule, f: &Matrix) -> Matrix {
        let id_c = Matrix::identity(f.field(), self.coring.dim());
        self.mc.induced_unchecked(&other.mc, &[f, &id_c])
    }

    /// Is `f` a colinear map `self -> other`?
    pub fn is_colinear(&self, other: &Comodule, f: &Matrix) -> bool {
        f.rows() == self.dim()
            && f.cols() == other.dim()
            && self.carrier.is_linear_map(&other.carrier, f, crate::module::Side::Right)
            && self.rho.mul(&self.tensor_map(other, f)) == f.mul(&other.rho)
    }
}

/// `Hom^C(M, N)`: right A-linear maps with `(f (x) id) rho_M = rho_N f`.
pub fn hom_colinear(m: &Comodule, n: &Comodule) -> Result<HomSpace> {
    if m.coring != n.coring {
        return Err(Error::CoringMismatch("colinear maps between comodules over different corings".into()));
    }
    if m.carrier.right_algebra() != n.carrier.right_algebra() {
        return Err(Error::AlgebraMismatch("comodule carriers".into()));
    }
    let f = m.carrier.field();
    let (dm, dn) = (m.dim(), n.dim());
    let dc = m.coring.dim();
    let x = m.rho.mul(m.mc.lift()); // dm x (dm*dc)
    let pn = n.mc.project(); // (dn*dc) x dim(N (x) C)
    let out = n.mc.dim();
    let base: Vec<(&Matrix, &Matrix)> = m
        .carrier
        .right_actions()
        .iter()
        .zip(n.carrier.right_actions())
        .collect();
    let extra = |i: usize, j: usize| -> Vec<u32> {
        // rho_M . lift . kron(E_ij, I) . proj_N  -  E_ij . rho_N
        let mut img = Matrix::zeros(f, dm, out);
        for r in 0..dm {
            let row = img.row_mut(r);
            for c in 0..dc {
                let coef = x.get(r, i * dc + c);
                if coef != 0 {
                    for (slot, &p) in row.iter_mut().zip(pn.row(j * dc + c)) {
                        *slot = f.mul_add(coef, p, *slot);
                    }
                }
            }
        }
        let row = img.row_mut(i);
        for (slot, &v) in row.iter_mut().zip(n.rho.row(j)) {
            *slot = f.sub(*slot, v);
        }
        img.into_data()
    };
    Ok(constrained_hom(f, dm, dn, &base, extra, dm * out))
}

/// Left `D`-comodule `N` with `lambda : N -> D (x)_B N`.
#[derive(Clone, Debug)]
pub struct LeftComodule {
    coring: Arc<Coring>,
    carrier: Bimodule,
    dn: TensorChain,
    lambda: Matrix,
}

impl LeftComodule {
    pub fn new(coring: Arc<Coring>, carrier: Bimodule, lambda: Matrix) -> Result<Self> {
        let dn = TensorChain::pair(coring.carrier(), &carrier)
            .map_err(|_| Error::CoringMismatch("left comodule carrier is not a left module over the coring base".into()))?;
        expect_shape(&lambda, carrier.dim(), dn.dim(), "left coaction")?;
        Ok(LeftComodule {
            coring,
            carrier,
            dn,
            lambda,
        })
    }

    pub fn from_raw(coring: Arc<Coring>, carrier: Bimodule, raw: &Matrix) -> Result<Self> {
        let dn = TensorChain::pair(coring.carrier(), &carrier)?;
        expect_shape(raw, carrier.dim(), dn.raw_dim(), "raw left coaction")?;
        let lambda = raw.mul(dn.project());
        LeftComodule::new(coring, carrier, lambda)
    }

    /// `D` with `lambda = Delta`.
    pub fn regular(coring: Arc<Coring>) -> Self {
        let carrier = coring.carrier().clone();
        let lambda = coring.delta().clone();
        LeftComodule::new(coring, carrier, lambda).expect("Delta has the right shape")
    }

    pub fn graded(coring: Arc<Coring>, grades: &[usize]) -> Result<Self> {
        let right = Comodule::graded(coring.clone(), grades)?;
        let f = coring.field();
        let n = grades.len();
        let g = coring.dim();
        let carrier = right.carrier().as_right().opposite();
        let carrier = carrier.with_right(right.carrier().left_algebra().clone(), vec![Matrix::identity(f, n)])?;
        let mut raw = Matrix::zeros(f, n, g * n);
        for (i, &gr) in grades.iter().enumerate() {
            raw.set(i, gr * n + i, 1);
        }
        LeftComodule::from_raw(coring, carrier, &raw)
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn lambda(&self) -> &Matrix {
        &self.lambda
    }

    /// `D (x)_B N`.
    pub fn dn(&self) -> &TensorChain {
        &self.dn
    }

    pub fn lambda_raw(&self) -> Matrix {
        self.lambda.mul(self.dn.lift())
    }

    /// The same data as a right comodule over the opposite coring.
    pub fn to_opposite(&self) -> Result<Comodule> {
        let op = Arc::new(self.coring.opposite());
        let carrier = self.carrier.opposite();
        let f = carrier.field();
        let raw = self.lambda_raw().mul(&twist(f, self.coring.dim(), self.dim()));
        Comodule::from_raw(op, carrier, &raw)
    }

    /// Inverse of [`LeftComodule::to_opposite`]: `c` is a right comodule over
    /// the opposite of `coring`.
    pub fn from_opposite(coring: Arc<Coring>, c: &Comodule) -> Result<Self> {
        if **c.coring() != coring.opposite() {
            return Err(Error::CoringMismatch("comodule is not over the opposite coring".into()));
        }
        let carrier = c.carrier().opposite();
        let f = carrier.field();
        let raw = c.rho_raw().mul(&twist(f, c.dim(), coring.dim()));
        LeftComodule::from_raw(coring, carrier, &raw)
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("left comodule");
        match self.to_opposite() {
            Ok(c) => {
                let inner = c.validate();
                v.checked += inner.checked;
                v.failures.extend(inner.failures.into_iter().map(|m| m.replace("right A-linear", "left B-linear").replace("left linear", "right linear")));
            }
            Err(e) => v.check(false, || e.to_string()),
        }
        v
    }

    /// Matrix of `id_D (x) f : D (x) N -> D (x) N'`.
    pub fn tensor_map(&self, other: &LeftComodule, f: &Matrix) -> Matrix {
        let id = Matrix::identity(f.field(), self.coring.dim());
        self.dn.induced_unchecked(&other.dn, &[&id, f])
    }

    pub fn is_colinear(&self, other: &LeftComodule, f: &Matrix) -> bool {
        f.rows() == self.dim()
            && f.cols() == other.dim()
            && self.carrier.is_linear_map(&other.carrier, f, crate::module::Side::Left)
            && self.lambda.mul(&self.tensor_map(other, f)) == f.mul(&other.lambda)
    }
}
