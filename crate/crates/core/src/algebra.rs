//! Finite-dimensional associative `F_p`-algebras given by structure constants,
//! and algebra morphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::{expect_shape, vector, Matrix, Subspace};
use crate::report::Validation;

/// `e_i * e_j = sum_k c[(i * dim + j) * dim + k] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: Fp,
    dim: usize,
    mul: Vec<Scalar>,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// No validation; call [`Algebra::validate`].
    pub fn new(field: Fp, dim: usize, mul: Vec<Scalar>, unit: Vec<Scalar>) -> Result<Self> {
        if mul.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::dims(format!(
                "algebra of dim {dim} needs {} structure constants and a unit of length {dim}",
                dim * dim * dim
            )));
        }
        if mul.iter().chain(&unit).any(|&x| x >= field.p()) {
            return Err(Error::dims("structure constants must be reduced".to_string()));
        }
        Ok(Algebra {
            field,
            dim,
            mul,
            unit,
        })
    }

    /// The ground field as a 1-dimensional algebra.
    pub fn ground(field: Fp) -> Self {
        Algebra {
            field,
            dim: 1,
            mul: vec![1],
            unit: vec![1],
        }
    }

    /// `F_p[x]/(f)` for monic `f = x^n + c_{n-1} x^{n-1} + ... + c_0`,
    /// given as `[c_0, ..., c_{n-1}]`; basis `1, x, ..., x^{n-1}`.
    pub fn quotient_polynomial(field: Fp, low_coeffs: &[Scalar]) -> Self {
        let n = low_coeffs.len();
        assert!(n >= 1, "polynomial must have positive degree");
        // x^k reduced, for k < 2n - 1
        let mut powers: Vec<Vec<Scalar>> = (0..n).map(|k| vector::unit(n, k)).collect();
        for k in n..2 * n - 1 {
            let prev = &powers[k - 1];
            // x * prev: shift, then replace x^n by -sum c_i x^i
            let top = prev[n - 1];
            let mut next = vec![0; n];
            next[1..n].copy_from_slice(&prev[..n - 1]);
            for (i, &c) in low_coeffs.iter().enumerate() {
                next[i] = field.sub(next[i], field.mul(top, c % field.p()));
            }
            powers.push(next);
        }
        let mut mul = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                mul[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&powers[i + j]);
            }
        }
        Algebra {
            field,
            dim: n,
            mul,
            unit: vector::unit(n, 0),
        }
    }

    /// `F_p[x]/(x^n)`.
    pub fn truncated_polynomial(field: Fp, n: usize) -> Self {
        Algebra::quotient_polynomial(field, &vec![0; n])
    }

    /// `F_4 = F_2[t]/(t^2 + t + 1)`.
    pub fn f4() -> Self {
        Algebra::quotient_polynomial(Fp::new(2).expect("2 is prime"), &[1, 1])
    }

    /// `F_p^n` with pointwise product (idempotent basis).
    pub fn diagonal(field: Fp, n: usize) -> Self {
        let mut mul = vec![0; n * n * n];
        for i in 0..n {
            mul[(i * n + i) * n + i] = 1;
        }
        Algebra {
            field,
            dim: n,
            mul,
            unit: vec![1; n],
        }
    }

    /// Direct product `self x other`.
    pub fn product(&self, other: &Algebra) -> Self {
        assert_eq!(self.field, other.field);
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let mut mul = vec![0; n * n * n];
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    mul[(i * n + j) * n + k] = self.mul[(i * a + j) * a + k];
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    mul[((a + i) * n + a + j) * n + a + k] = other.mul[(i * b + j) * b + k];
                }
            }
        }
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        Algebra {
            field: self.field,
            dim: n,
            mul,
            unit,
        }
    }

    /// Full matrix algebra `M_n(F_p)`, basis `E_ij` at index `i * n + j`.
    pub fn matrix_algebra(field: Fp, n: usize) -> Self {
        let d = n * n;
        let mut mul = vec![0; d * d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // E_ij E_jl = E_il
                    mul[((i * n + j) * d + j * n + l) * d + i * n + l] = 1;
                }
            }
        }
        let mut unit = vec![0; d];
        for i in 0..n {
            unit[i * n + i] = 1;
        }
        Algebra {
            field,
            dim: d,
            mul,
            unit,
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.mul
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim;
        &self.mul[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                vector::add_scaled(f, &mut out, self.basis_product(i, j), f.mul(a, b));
            }
        }
        out
    }

    /// Matrix of `y -> x * y`; row `i` is `x * e_i`.
    pub fn lmul_matrix(&self, x: &[Scalar]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.mul(x, &vector::unit(self.dim, i)))
            .collect();
        Matrix::from_rows(self.field, self.dim, &rows)
    }

    /// Matrix of `y -> y * x`; row `i` is `e_i * x`.
    pub fn rmul_matrix(&self, x: &[Scalar]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.mul(&vector::unit(self.dim, i), x))
            .collect();
        Matrix::from_rows(self.field, self.dim, &rows)
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut mul = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                mul[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(self.basis_product(j, i));
            }
        }
        Algebra {
            field: self.field,
            dim: d,
            mul,
            unit: self.unit.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Associativity on all basis triples and the two unit laws.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("algebra");
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..d {
                    let left = self.mul(&ij, &vector::unit(d, k));
                    let right = self.mul(&vector::unit(d, i), self.basis_product(j, k));
                    v.check(left == right, || format!("associativity fails at ({i},{j},{k})"));
                }
            }
        }
        for i in 0..d {
            let e = vector::unit(d, i);
            v.check(self.mul(&self.unit, &e) == e, || format!("left unit law fails at e_{i}"));
            v.check(self.mul(&e, &self.unit) == e, || format!("right unit law fails at e_{i}"));
        }
        v
    }

    /// Two-sided ideal test for a subspace.
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        self.is_left_ideal(s) && self.is_right_ideal(s)
    }

    pub fn is_left_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|k| {
            let e = vector::unit(self.dim, k);
            s.basis().row_iter().all(|x| s.contains_vector(&self.mul(&e, x)))
        })
    }

    pub fn is_right_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|k| {
            let e = vector::unit(self.dim, k);
            s.basis().row_iter().all(|x| s.contains_vector(&self.mul(x, &e)))
        })
    }

    /// Subalgebra spanned by the given subspace (must contain 1 and be closed).
    pub fn subalgebra(&self, s: &Subspace) -> Result<(Algebra, Matrix)> {
        if !s.contains_vector(&self.unit) {
            return Err(Error::hypothesis("subspace does not contain the unit"));
        }
        let n = s.dim();
        let mut mul = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(s.basis().row(i), s.basis().row(j));
                let c = s
                    .coordinates(&prod)
                    .ok_or_else(|| Error::hypothesis("subspace is not closed under products"))?;
                mul[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&c);
            }
        }
        let unit = s.coordinates(&self.unit).expect("checked above");
        Ok((
            Algebra {
                field: self.field,
                dim: n,
                mul,
                unit,
            },
            s.basis().clone(),
        ))
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over F_{})", self.dim, self.field.p())
    }
}

/// Algebra map `source -> target`, a `dim source x dim target` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraMorphism {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub map: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Matrix) -> Result<Self> {
        expect_shape(&map, source.dim(), target.dim(), "algebra morphism")?;
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let map = Matrix::identity(a.field(), a.dim());
        AlgebraMorphism {
            source: a.clone(),
            target: a,
            map,
        }
    }

    /// The structure map `F_p -> a`.
    pub fn unit_map(a: Arc<Algebra>) -> Self {
        let map = Matrix::row_vector(a.field(), a.unit());
        AlgebraMorphism {
            source: Arc::new(Algebra::ground(a.field())),
            target: a,
            map,
        }
    }

    /// First `self`, then `next`.
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if self.target != next.source {
            return Err(Error::AlgebraMismatch("composing morphisms".into()));
        }
        Ok(AlgebraMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.mul(&next.map),
        })
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map == Matrix::identity(self.map.field(), self.map.rows())
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("algebra morphism");
        let (s, t) = (&self.source, &self.target);
        let d = s.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(s.basis_product(i, j));
                let rhs = t.mul(self.map.row(i), self.map.row(j));
                v.check(lhs == rhs, || format!("not multiplicative at ({i},{j})"));
            }
        }
        v.check(self.apply(s.unit()) == t.unit(), || "not unital".to_string());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn f4_is_a_field_algebra() {
        let a = Algebra::f4();
        assert!(a.validate().is_ok());
        // t * t = t + 1
        assert_eq!(a.basis_product(1, 1), &[1, 1]);
    }

    #[test]
    fn dual_numbers_pass() {
        let a = Algebra::truncated_polynomial(f2(), 2);
        assert!(a.validate().is_ok());
        assert_eq!(a.basis_product(1, 1), &[0, 0]);
    }

    #[test]
    fn zero_unit_fails() {
        let a = Algebra::truncated_polynomial(f2(), 2);
        let broken = Algebra::new(f2(), 2, a.structure_constants().to_vec(), vec![0, 0]).unwrap();
        let v = broken.validate();
        assert!(!v.is_ok());
        assert!(v.failures.iter().any(|m| m.contains("unit")));
    }

    #[test]
    fn constructors_validate() {
        let f3 = Fp::new(3).unwrap();
        for a in [
            Algebra::diagonal(f3, 3),
            Algebra::matrix_algebra(f3, 2),
            Algebra::truncated_polynomial(f3, 3).product(&Algebra::ground(f3)),
            Algebra::matrix_algebra(f3, 2).opposite(),
        ] {
            assert!(a.validate().is_ok(), "{a:?}");
        }
        assert!(!Algebra::matrix_algebra(f3, 2).is_commutative());
    }

    #[test]
    fn inclusion_f2_into_f4() {
        let f4 = Arc::new(Algebra::f4());
        let beta = AlgebraMorphism::unit_map(f4);
        assert!(beta.validate().is_ok());
    }
}
