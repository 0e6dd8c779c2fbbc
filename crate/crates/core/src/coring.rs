//! Corings: an `A`-bimodule `C` with `Delta : C -> C (x)_A C` and
//! `eps : C -> A`. `Delta` is stored in quotient coordinates of `C (x)_A C`.

use std::sync::{Arc, OnceLock};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::{expect_shape, Matrix};
use crate::module::Bimodule;
use crate::report::Validation;
use crate::tensor::{act_grid, left_act_grid, twist, TensorChain};

#[derive(Debug)]
pub struct Coring {
    carrier: Bimodule,
    cc: TensorChain,
    ccc: OnceLock<TensorChain>,
    delta: Matrix,
    eps: Matrix,
}

impl Clone for Coring {
    fn clone(&self) -> Self {
        Coring {
            carrier: self.carrier.clone(),
            cc: self.cc.clone(),
            ccc: OnceLock::new(),
            delta: self.delta.clone(),
            eps: self.eps.clone(),
        }
    }
}

impl PartialEq for Coring {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.delta == other.delta && self.eps == other.eps
    }
}

impl Eq for Coring {}

impl Coring {
    /// `delta` given in quotient coordinates of `C (x)_A C`.
    pub fn new(carrier: Bimodule, delta: Matrix, eps: Matrix) -> Result<Self> {
        if carrier.left_algebra() != carrier.right_algebra() {
            return Err(Error::AlgebraMismatch("coring carrier must be an (A, A)-bimodule".into()));
        }
        let cc = TensorChain::pair(&carrier, &carrier)?;
        expect_shape(&delta, carrier.dim(), cc.dim(), "comultiplication")?;
        expect_shape(&eps, carrier.dim(), carrier.left_algebra().dim(), "counit")?;
        Ok(Coring {
            carrier,
            cc,
            ccc: OnceLock::new(),
            delta,
            eps,
        })
    }

    /// `delta_raw` maps into the raw grid of `C (x)_R C`.
    pub fn from_raw(carrier: Bimodule, delta_raw: &Matrix, eps: Matrix) -> Result<Self> {
        let cc = TensorChain::pair(&carrier, &carrier)?;
        expect_shape(delta_raw, carrier.dim(), cc.raw_dim(), "raw comultiplication")?;
        let delta = delta_raw.mul(cc.project());
        Coring::new(carrier, delta, eps)
    }

    /// `C = A`, `Delta(a) = 1 (x) a`, `eps = id`.
    pub fn trivial(a: Arc<Algebra>) -> Self {
        let f = a.field();
        let d = a.dim();
        let carrier = Bimodule::regular(a.clone());
        let mut raw = Matrix::zeros(f, d, d * d);
        for i in 0..d {
            for (k, &u) in a.unit().iter().enumerate() {
                raw.set(i, k * d + i, u);
            }
        }
        Coring::from_raw(carrier, &raw, Matrix::identity(f, d)).expect("trivial coring is well-formed")
    }

    /// Grouplike coring on `n` points over the ground field:
    /// `Delta(g) = g (x) g`, `eps(g) = 1`.
    pub fn grouplike(field: Fp, n: usize) -> Self {
        let carrier = Bimodule::vector_space(field, n);
        let mut raw = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            raw.set(i, i * n + i, 1);
        }
        let eps = Matrix::from_vec(field, n, 1, vec![1; n]);
        Coring::from_raw(carrier, &raw, eps).expect("grouplike coring is well-formed")
    }

    /// Sweedler coring `A (x)_F A` with `Delta(a (x) b) = (a (x) 1) (x)_A (1 (x) b)`
    /// and `eps(a (x) b) = ab`.
    pub fn sweedler(a: Arc<Algebra>) -> Self {
        let f = a.field();
        let d = a.dim();
        let id = Matrix::identity(f, d);
        let left = (0..d).map(|k| a.lmul_matrix(&unit(d, k)).kron(&id)).collect();
        let right = (0..d).map(|k| id.kron(&a.rmul_matrix(&unit(d, k)))).collect();
        let carrier = Bimodule::new(d * d, a.clone(), a.clone(), left, right).expect("shapes");
        let n = d * d;
        let mut raw = Matrix::zeros(f, n, n * n);
        let mut eps = Matrix::zeros(f, n, d);
        for i in 0..d {
            for j in 0..d {
                for (u, &cu) in a.unit().iter().enumerate() {
                    for (v, &cv) in a.unit().iter().enumerate() {
                        let c = f.mul(cu, cv);
                        if c != 0 {
                            let idx = (i * d + u) * n + v * d + j;
                            let old = raw.get(i * d + j, idx);
                            raw.set(i * d + j, idx, f.add(old, c));
                        }
                    }
                }
                eps.row_mut(i * d + j).copy_from_slice(a.basis_product(i, j));
            }
        }
        Coring::from_raw(carrier, &raw, eps).expect("Sweedler coring is well-formed")
    }

    pub fn field(&self) -> Fp {
        self.carrier.field()
    }

    pub fn base(&self) -> &Arc<Algebra> {
        self.carrier.left_algebra()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn eps(&self) -> &Matrix {
        &self.eps
    }

    /// `C (x)_A C`.
    pub fn cc(&self) -> &TensorChain {
        &self.cc
    }

    /// `C (x)_A C (x)_A C`.
    pub fn ccc(&self) -> &TensorChain {
        self.ccc.get_or_init(|| {
            TensorChain::new(vec![self.carrier.clone(); 3]).expect("factors already compatible")
        })
    }

    /// `Delta` into the raw grid (through the canonical lift).
    pub fn delta_raw(&self) -> Matrix {
        self.delta.mul(self.cc.lift())
    }

    /// Raw map `(i, j) -> e_i . eps(e_j)` on `C (x)_R C`, landing in `C`.
    pub fn right_counit_grid(&self) -> Matrix {
        act_grid(self.field(), self.dim(), self.carrier.right_actions(), &self.eps)
    }

    /// Raw map `(i, j) -> eps(e_i) . e_j`.
    pub fn left_counit_grid(&self) -> Matrix {
        left_act_grid(self.field(), self.dim(), self.carrier.left_actions(), &self.eps)
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("coring");
        let f = self.field();
        let c = &self.carrier;
        let a = self.base();
        let reg = Bimodule::regular(a.clone());
        v.merge(c.validate());
        let cc_mod = self.cc.module();
        for k in 0..a.dim() {
            v.check(c.left_actions()[k].mul(&self.delta) == self.delta.mul(&cc_mod.left_actions()[k]), || {
                format!("comultiplication is not left A-linear at e_{k}")
            });
            v.check(c.right_actions()[k].mul(&self.delta) == self.delta.mul(&cc_mod.right_actions()[k]), || {
                format!("comultiplication is not right A-linear at e_{k}")
            });
            v.check(c.left_actions()[k].mul(&self.eps) == self.eps.mul(&reg.left_actions()[k]), || {
                format!("counit is not left A-linear at e_{k}")
            });
            v.check(c.right_actions()[k].mul(&self.eps) == self.eps.mul(&reg.right_actions()[k]), || {
                format!("counit is not right A-linear at e_{k}")
            });
        }
        if !v.is_ok() {
            return v;
        }
        let id = Matrix::identity(f, self.dim());
        let dl = self.delta_raw();
        let ccc = self.ccc();
        let lhs = dl.mul(&dl.kron(&id)).mul(ccc.project());
        let rhs = dl.mul(&id.kron(&dl)).mul(ccc.project());
        let left_counit = dl.mul(&self.left_counit_grid());
        let right_counit = dl.mul(&self.right_counit_grid());
        for i in 0..self.dim() {
            v.check(lhs.row(i) == rhs.row(i), || format!("coassociativity fails at c_{i}"));
            v.check(left_counit.row(i) == id.row(i), || format!("left counit law fails at c_{i}"));
            v.check(right_counit.row(i) == id.row(i), || format!("right counit law fails at c_{i}"));
        }
        v
    }

    /// The opposite coring over `A^op`: carrier `C^op`, `Delta^op = twist . Delta`.
    pub fn opposite(&self) -> Coring {
        let carrier = self.carrier.opposite();
        let n = self.dim();
        let raw = self.delta_raw().mul(&twist(self.field(), n, n));
        Coring::from_raw(carrier, &raw, self.eps.clone()).expect("opposite coring is well-formed")
    }

    /// Evaluation of the functional `g` (a `dim C x dim A` matrix) along the
    /// right action: raw `(i, j) -> e_i . g(e_j)`.
    pub(crate) fn right_eval_grid(&self, g: &Matrix) -> Matrix {
        act_grid(self.field(), self.dim(), self.carrier.right_actions(), g)
    }

    /// Raw `(i, j) -> g(e_i) . e_j`.
    pub(crate) fn left_eval_grid(&self, g: &Matrix) -> Matrix {
        left_act_grid(self.field(), self.dim(), self.carrier.left_actions(), g)
    }

    /// The coring with `Delta` in quotient coordinates replaced; for tests.
    pub fn with_delta(&self, delta: Matrix) -> Result<Coring> {
        Coring::new(self.carrier.clone(), delta, self.eps.clone())
    }

    pub fn with_eps(&self, eps: Matrix) -> Result<Coring> {
        Coring::new(self.carrier.clone(), self.delta.clone(), eps)
    }
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    crate::linalg::vector::unit(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_corings_validate() {
        let f2 = Fp::new(2).unwrap();
        let trivial = Coring::trivial(Arc::new(Algebra::ground(f2)));
        assert!(trivial.validate().is_ok());
        let g = Coring::grouplike(f2, 2);
        assert!(g.validate().is_ok(), "{:?}", g.validate());
        let s = Coring::sweedler(Arc::new(Algebra::f4()));
        assert_eq!(s.dim(), 4);
        assert_eq!(s.cc().dim(), 8);
        assert!(s.validate().is_ok(), "{:?}", s.validate());
        let t = Coring::trivial(Arc::new(Algebra::truncated_polynomial(Fp::new(3).unwrap(), 2)));
        assert!(t.validate().is_ok());
    }

    #[test]
    fn opposites_validate() {
        let s = Coring::sweedler(Arc::new(Algebra::matrix_algebra(Fp::new(2).unwrap(), 2)));
        assert!(s.validate().is_ok());
        assert!(s.opposite().validate().is_ok());
        assert_eq!(s.opposite().opposite(), s);
    }

    #[test]
    fn broken_comultiplication_names_the_vector() {
        let g = Coring::grouplike(Fp::new(2).unwrap(), 2);
        let mut d = g.delta().clone();
        // Delta(g_1) = g_0 (x) g_1 breaks both counit laws at c_1
        d.row_mut(1).iter_mut().for_each(|x| *x = 0);
        d.set(1, 1, 1);
        let v = g.with_delta(d).unwrap().validate();
        assert!(!v.is_ok());
        assert!(v.failures.iter().all(|m| m.ends_with("c_1")), "{:?}", v.failures);
    }
}
