//! Bimodules given by action matrices. A one-sided module is a bimodule whose
//! other side is the ground field.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::{expect_shape, vector, Matrix, Subspace};
use crate::report::Validation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Both,
}

/// `left_act[k]` is the matrix of `m -> e_k . m`, `right_act[k]` of `m -> m . e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bimodule {
    dim: usize,
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    left_act: Vec<Matrix>,
    right_act: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        dim: usize,
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        left_act: Vec<Matrix>,
        right_act: Vec<Matrix>,
    ) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::AlgebraMismatch("actions over different fields".into()));
        }
        if left_act.len() != left.dim() || right_act.len() != right.dim() {
            return Err(Error::dims("one action matrix per basis element is required"));
        }
        for m in left_act.iter().chain(&right_act) {
            expect_shape(m, dim, dim, "action matrix")?;
        }
        Ok(Bimodule {
            dim,
            left,
            right,
            left_act,
            right_act,
        })
    }

    /// Right module; the left side is the ground field.
    pub fn right_module(dim: usize, right: Arc<Algebra>, right_act: Vec<Matrix>) -> Result<Self> {
        let f = right.field();
        Bimodule::new(
            dim,
            Arc::new(Algebra::ground(f)),
            right,
            vec![Matrix::identity(f, dim)],
            right_act,
        )
    }

    pub fn left_module(dim: usize, left: Arc<Algebra>, left_act: Vec<Matrix>) -> Result<Self> {
        let f = left.field();
        Bimodule::new(
            dim,
            left,
            Arc::new(Algebra::ground(f)),
            left_act,
            vec![Matrix::identity(f, dim)],
        )
    }

    /// A plain vector space over the ground field.
    pub fn vector_space(field: Fp, dim: usize) -> Self {
        let g = Arc::new(Algebra::ground(field));
        let id = Matrix::identity(field, dim);
        Bimodule {
            dim,
            left: g.clone(),
            right: g,
            left_act: vec![id.clone()],
            right_act: vec![id],
        }
    }

    /// `a` as an `(a, a)`-bimodule.
    pub fn regular(a: Arc<Algebra>) -> Self {
        let d = a.dim();
        let left_act = (0..d).map(|k| a.lmul_matrix(&vector::unit(d, k))).collect();
        let right_act = (0..d).map(|k| a.rmul_matrix(&vector::unit(d, k))).collect();
        Bimodule {
            dim: d,
            left: a.clone(),
            right: a,
            left_act,
            right_act,
        }
    }

    /// The free right module `a^n`, copy `i` occupying coordinates `i*dim a ..`.
    pub fn free_right(a: Arc<Algebra>, n: usize) -> Self {
        let reg = Bimodule::regular(a).as_right();
        let mut out = Bimodule::zero_like(&reg);
        for _ in 0..n {
            out = out.direct_sum(&reg).expect("same algebras");
        }
        out
    }

    /// Zero module with the same acting algebras.
    pub fn zero_like(m: &Bimodule) -> Self {
        let f = m.field();
        Bimodule {
            dim: 0,
            left: m.left.clone(),
            right: m.right.clone(),
            left_act: vec![Matrix::zeros(f, 0, 0); m.left.dim()],
            right_act: vec![Matrix::zeros(f, 0, 0); m.right.dim()],
        }
    }

    pub fn field(&self) -> Fp {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_act
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right_act
    }

    /// Matrix of `m -> x . m`.
    pub fn left_action(&self, x: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, &self.left_act, x)
    }

    /// Matrix of `m -> m . x`.
    pub fn right_action(&self, x: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, &self.right_act, x)
    }

    /// Forget the left structure.
    pub fn as_right(&self) -> Bimodule {
        Bimodule::right_module(self.dim, self.right.clone(), self.right_act.clone())
            .expect("shapes already checked")
    }

    /// Forget the right structure.
    pub fn as_left(&self) -> Bimodule {
        Bimodule::left_module(self.dim, self.left.clone(), self.left_act.clone())
            .expect("shapes already checked")
    }

    /// Replace one side's algebra and actions.
    pub fn with_left(&self, left: Arc<Algebra>, left_act: Vec<Matrix>) -> Result<Bimodule> {
        Bimodule::new(self.dim, left, self.right.clone(), left_act, self.right_act.clone())
    }

    pub fn with_right(&self, right: Arc<Algebra>, right_act: Vec<Matrix>) -> Result<Bimodule> {
        Bimodule::new(self.dim, self.left.clone(), right, self.left_act.clone(), right_act)
    }

    /// `M^op` as a `(B^op, A^op)`-bimodule: sides swapped.
    pub fn opposite(&self) -> Bimodule {
        Bimodule {
            dim: self.dim,
            left: Arc::new(self.right.opposite()),
            right: Arc::new(self.left.opposite()),
            left_act: self.right_act.clone(),
            right_act: self.left_act.clone(),
        }
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("bimodule");
        let f = self.field();
        let id = Matrix::identity(f, self.dim);
        let (l, r) = (&self.left, &self.right);
        v.check(self.left_action(l.unit()) == id, || "left unit does not act as identity".into());
        v.check(self.right_action(r.unit()) == id, || "right unit does not act as identity".into());
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                // (e_i e_j) . m = e_i . (e_j . m)
                let lhs = self.left_action(l.basis_product(i, j));
                let rhs = self.left_act[j].mul(&self.left_act[i]);
                v.check(lhs == rhs, || format!("left action not associative at ({i},{j})"));
            }
        }
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let lhs = self.right_action(r.basis_product(i, j));
                let rhs = self.right_act[i].mul(&self.right_act[j]);
                v.check(lhs == rhs, || format!("right action not associative at ({i},{j})"));
            }
        }
        for (i, la) in self.left_act.iter().enumerate() {
            for (j, ra) in self.right_act.iter().enumerate() {
                v.check(la.mul(ra) == ra.mul(la), || format!("actions of left e_{i} and right e_{j} do not commute"));
            }
        }
        v
    }

    /// Restrict the chosen side along `beta`: `a` acts as `beta(a)`.
    pub fn restrict(&self, beta: &AlgebraMorphism, side: Side) -> Result<Bimodule> {
        let acts = |mine: &Arc<Algebra>, act: &[Matrix]| -> Result<Vec<Matrix>> {
            if **mine != *beta.target {
                return Err(Error::AlgebraMismatch(
                    "restriction: morphism target is not the acting algebra".into(),
                ));
            }
            Ok((0..beta.source.dim())
                .map(|k| combine(self.field(), self.dim, act, beta.map.row(k)))
                .collect())
        };
        let mut out = self.clone();
        if matches!(side, Side::Left | Side::Both) {
            out.left_act = acts(&self.left, &self.left_act)?;
            out.left = beta.source.clone();
        }
        if matches!(side, Side::Right | Side::Both) {
            out.right_act = acts(&self.right, &self.right_act)?;
            out.right = beta.source.clone();
        }
        Ok(out)
    }

    pub fn is_stable(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim
            && self
                .left_act
                .iter()
                .chain(&self.right_act)
                .all(|a| s.basis().mul(a).row_iter().all(|r| s.contains_vector(r)))
    }

    /// Submodule on a stable subspace; returns it with the inclusion
    /// (basis of `s`, as a `dim s x dim self` matrix).
    pub fn submodule(&self, s: &Subspace) -> Result<(Bimodule, Matrix)> {
        if s.ambient() != self.dim {
            return Err(Error::dims("submodule: ambient dimension"));
        }
        let restrict = |acts: &[Matrix]| -> Result<Vec<Matrix>> {
            acts.iter()
                .map(|a| {
                    s.coordinates_of_rows(&s.basis().mul(a))
                        .map_err(|_| Error::hypothesis("subspace is not stable under the actions"))
                })
                .collect()
        };
        let sub = Bimodule {
            dim: s.dim(),
            left: self.left.clone(),
            right: self.right.clone(),
            left_act: restrict(&self.left_act)?,
            right_act: restrict(&self.right_act)?,
        };
        Ok((sub, s.basis().clone()))
    }

    /// Quotient by a stable subspace; returns `(quotient, projection, lift)`.
    pub fn quotient(&self, s: &Subspace) -> Result<(Bimodule, Matrix, Matrix)> {
        if !self.is_stable(s) {
            return Err(Error::hypothesis("quotient by a subspace that is not stable"));
        }
        let (project, lift) = quotient_maps(s);
        let act = |acts: &[Matrix]| -> Vec<Matrix> { acts.iter().map(|a| lift.mul(a).mul(&project)).collect() };
        let q = Bimodule {
            dim: project.cols(),
            left: self.left.clone(),
            right: self.right.clone(),
            left_act: act(&self.left_act),
            right_act: act(&self.right_act),
        };
        Ok((q, project, lift))
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Result<Bimodule> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::AlgebraMismatch("direct sum of modules over different algebras".into()));
        }
        let f = self.field();
        let block = |a: &Matrix, b: &Matrix| {
            let n = a.rows() + b.rows();
            let mut out = Matrix::zeros(f, n, n);
            for r in 0..a.rows() {
                out.row_mut(r)[..a.cols()].copy_from_slice(a.row(r));
            }
            for r in 0..b.rows() {
                out.row_mut(a.rows() + r)[a.cols()..].copy_from_slice(b.row(r));
            }
            out
        };
        Ok(Bimodule {
            dim: self.dim + other.dim,
            left: self.left.clone(),
            right: self.right.clone(),
            left_act: self.left_act.iter().zip(&other.left_act).map(|(a, b)| block(a, b)).collect(),
            right_act: self.right_act.iter().zip(&other.right_act).map(|(a, b)| block(a, b)).collect(),
        })
    }

    /// Smallest stable subspace containing the given vectors.
    pub fn generated_submodule(&self, gens: &Subspace) -> Subspace {
        let f = self.field();
        let mut s = gens.clone();
        loop {
            let mut blocks = vec![s.basis().clone()];
            for a in self.left_act.iter().chain(&self.right_act) {
                blocks.push(s.basis().mul(a));
            }
            let refs: Vec<&Matrix> = blocks.iter().collect();
            let next = Subspace::row_space(&Matrix::vstack(f, self.dim, &refs));
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Does `map` (a `dim self x dim other` matrix) commute with the actions
    /// on the requested side(s)?
    pub fn is_linear_map(&self, other: &Bimodule, map: &Matrix, side: Side) -> bool {
        let left_ok = || {
            self.left == other.left
                && self.left_act.iter().zip(&other.left_act).all(|(a, b)| a.mul(map) == map.mul(b))
        };
        let right_ok = || {
            self.right == other.right
                && self.right_act.iter().zip(&other.right_act).all(|(a, b)| a.mul(map) == map.mul(b))
        };
        match side {
            Side::Left => left_ok(),
            Side::Right => right_ok(),
            Side::Both => left_ok() && right_ok(),
        }
    }
}

/// `sum_k x_k acts[k]`.
pub(crate) fn combine(f: Fp, dim: usize, acts: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(f, dim, dim);
    for (a, &c) in acts.iter().zip(x) {
        if c != 0 {
            out = out.add(&a.scale(c));
        }
    }
    out
}

/// Projection onto the complement coordinates of `s` and the matching lift.
pub(crate) fn quotient_maps(s: &Subspace) -> (Matrix, Matrix) {
    let f = s.field();
    let free = s.non_pivots();
    let project = s.reduction_matrix().select_cols(&free);
    let mut lift = Matrix::zeros(f, free.len(), s.ambient());
    for (i, &c) in free.iter().enumerate() {
        lift.set(i, c, 1);
    }
    (project, lift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_and_free_validate() {
        let a = Arc::new(Algebra::truncated_polynomial(Fp::new(3).unwrap(), 3));
        assert!(Bimodule::regular(a.clone()).validate().is_ok());
        let free = Bimodule::free_right(a, 2);
        assert_eq!(free.dim(), 6);
        assert!(free.validate().is_ok());
    }

    #[test]
    fn restrict_f4_to_f2() {
        let f4 = Arc::new(Algebra::f4());
        let m = Bimodule::regular(f4.clone()).as_right();
        let beta = AlgebraMorphism::unit_map(f4.clone());
        let r = m.restrict(&beta, Side::Right).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.right_algebra().dim(), 1);
        assert_eq!(r.right_actions()[0], Matrix::identity(m.field(), 2));
        // identity restriction changes nothing
        let id = AlgebraMorphism::identity(f4);
        assert_eq!(m.restrict(&id, Side::Right).unwrap(), m);
    }

    #[test]
    fn restriction_composes() {
        let f = Fp::new(2).unwrap();
        let t = Arc::new(Algebra::truncated_polynomial(f, 4));
        let s = Arc::new(Algebra::truncated_polynomial(f, 2));
        // y -> x^2
        let xi = AlgebraMorphism::new(s.clone(), t.clone(), Matrix::from_ints(f, &[&[1, 0, 0, 0], &[0, 0, 1, 0]])).unwrap();
        assert!(xi.validate().is_ok());
        let unit = AlgebraMorphism::unit_map(s);
        let m = Bimodule::regular(t).as_right();
        let twice = m.restrict(&xi, Side::Right).unwrap().restrict(&unit, Side::Right).unwrap();
        let once = m.restrict(&unit.then(&xi).unwrap(), Side::Right).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn quotient_of_dual_numbers() {
        let f = Fp::new(2).unwrap();
        let t = Arc::new(Algebra::truncated_polynomial(f, 2));
        let m = Bimodule::regular(t).as_right();
        let x = Subspace::span(f, 2, &[vec![0, 1]]);
        let (q, p, l) = m.quotient(&x).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.validate().is_ok());
        assert_eq!(l.mul(&p), Matrix::identity(f, 1));
        // x acts as zero on T/(x)
        assert!(q.right_actions()[1].is_zero());
        let (sub, _) = m.submodule(&x).unwrap();
        assert!(sub.right_actions()[1].is_zero());
    }
}
