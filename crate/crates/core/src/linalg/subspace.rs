//! Subspaces of `F_p^n` in canonical RREF form, so that equality is
//! bit-exact equality of basis matrices.

use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Fp, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Fp, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (reduced, pivots) = m.rref_pivots();
        let basis = reduced.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn span(field: Fp, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::row_space(&Matrix::from_rows(field, ambient, vectors))
    }

    pub fn field(&self) -> Fp {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; a basis of the quotient by this space.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_ambient(&self, n: usize, what: &str) -> Result<()> {
        if n != self.ambient {
            return Err(Error::dims(format!(
                "{what}: ambient {n} vs {}",
                self.ambient
            )));
        }
        Ok(())
    }

    /// `v` minus its component along the pivots; zero iff `v` lies in the space.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                    *o = f.mul_add(b, neg, *o);
                }
            }
        }
        out
    }

    /// Matrix of [`Subspace::reduce`], an `n x n` projection with kernel `self`.
    pub fn reduction_matrix(&self) -> Matrix {
        let f = self.field();
        let mut red = Matrix::identity(f, self.ambient);
        for (r, &pc) in self.pivots.iter().enumerate() {
            let row = red.row_mut(pc);
            for (c, &b) in self.basis.row(r).iter().enumerate() {
                row[c] = f.sub(row[c], b);
            }
        }
        red
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to the RREF basis, if `v` is inside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Coordinates of every row of `m`; fails if some row is outside.
    pub fn coordinates_of_rows(&self, m: &Matrix) -> Result<Matrix> {
        self.check_ambient(m.cols(), "coordinates")?;
        for (r, row) in m.row_iter().enumerate() {
            if !self.contains_vector(row) {
                return Err(Error::consistency(format!(
                    "row {r} is outside the subspace"
                )));
            }
        }
        Ok(m.select_cols(&self.pivots))
    }

    /// Element with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.basis.apply(coords)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.row_iter().all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient, "sum")?;
        let f = self.field();
        Ok(Subspace::row_space(&Matrix::vstack(
            f,
            self.ambient,
            &[&self.basis, &other.basis],
        )))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient, "intersection")?;
        // {x : x . A in B}, pushed forward along A
        let pre = preimage(&self.basis, other)?;
        Ok(Subspace::row_space(&pre.basis.mul(&self.basis)))
    }

    /// Image of this subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        self.check_ambient(m.rows(), "image")?;
        Ok(Subspace::row_space(&self.basis.mul(m)))
    }

    /// Random element of the subspace.
    pub fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Vec<Scalar> {
        let p = self.field().p();
        let coords: Vec<Scalar> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        self.element(&coords)
    }

    /// All elements, in lexicographic order of coordinates. Small spaces only.
    pub fn elements(&self) -> Vec<Vec<Scalar>> {
        let p = self.field().p();
        enumerate_vectors(p, self.dim())
            .into_iter()
            .map(|c| self.element(&c))
            .collect()
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}", self.dim(), self.ambient)?;
        for r in self.basis.row_iter() {
            write!(f, " {r:?}")?;
        }
        write!(f, ")")
    }
}

/// All vectors of `F_p^n`; `p^n` of them.
pub fn enumerate_vectors(p: u32, n: usize) -> Vec<Vec<Scalar>> {
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = (idx % p as usize) as Scalar;
                idx /= p as usize;
            }
            v
        })
        .collect()
}

/// `{v : v . m = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let r = m.rref();
    let rows: Vec<usize> = (r.rank..m.rows()).collect();
    Subspace::row_space(&r.transform.select_rows(&rows))
}

/// `{v : v . m in s}`.
pub fn preimage(m: &Matrix, s: &Subspace) -> Result<Subspace> {
    if m.cols() != s.ambient() {
        return Err(Error::dims(format!(
            "preimage: map codomain {} vs subspace ambient {}",
            m.cols(),
            s.ambient()
        )));
    }
    if s.is_zero() {
        return Ok(kernel_basis(m));
    }
    Ok(kernel_basis(&m.mul(&s.reduction_matrix())))
}

/// Canonical solution of `x . m = target`.
pub fn solve_linear(m: &Matrix, target: &[Scalar]) -> Option<Vec<Scalar>> {
    m.solve_left(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let f = Fp::new(5).unwrap();
        assert!(kernel_basis(&Matrix::identity(f, 3)).is_zero());
        assert!(kernel_basis(&Matrix::zeros(f, 3, 2)).is_full());
        let k = kernel_basis(&Matrix::from_ints(f2(), &[&[1], &[1]]));
        assert_eq!(k, Subspace::span(f2(), 2, &[vec![1, 1]]));
    }

    #[test]
    fn intersection_over_f2() {
        let a = Subspace::span(f2(), 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(f2(), 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let want = Subspace::span(f2(), 3, &[vec![0, 1, 0]]);
        assert_eq!(a.intersection(&b).unwrap(), want);
        let full = Subspace::full(f2(), 3);
        assert_eq!(full.intersection(&b).unwrap(), b);
        assert!(full.contains(&b));
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let f = Fp::new(3).unwrap();
        let m = Matrix::from_ints(f, &[&[1, 2], &[2, 1], &[0, 0]]);
        assert_eq!(preimage(&m, &Subspace::zero(f, 2)).unwrap(), kernel_basis(&m));
    }

    #[test]
    fn mismatched_ambient_is_rejected() {
        let a = Subspace::full(f2(), 2);
        let b = Subspace::full(f2(), 3);
        assert!(a.sum(&b).is_err());
        assert!(preimage(&Matrix::identity(f2(), 2), &b).is_err());
    }

    fn arb_matrix(p: u32, max: usize) -> impl Strategy<Value = Matrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |d| {
                Matrix::from_vec(Fp::new(p).unwrap(), r, c, d)
            })
        })
    }

    fn arb_rows(p: u32, n: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
        proptest::collection::vec(proptest::collection::vec(0..p, n), 0..=max_rows)
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix(5, 6)) {
            let r = m.rref();
            prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
            prop_assert_eq!(r.transform.mul(&m), r.reduced);
            prop_assert!(r.transform.is_invertible());
        }

        #[test]
        fn rank_nullity(m in arb_matrix(3, 6)) {
            prop_assert_eq!(kernel_basis(&m).dim() + m.rank(), m.rows());
        }

        #[test]
        fn canonical_under_shuffle(rows in arb_rows(3, 4, 5), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let f = Fp::new(3).unwrap();
            let a = Subspace::span(f, 4, &rows);
            let mut shuffled = rows.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            // add a redundant combination too
            if rows.len() >= 2 {
                let extra: Vec<u32> = rows[0].iter().zip(&rows[1]).map(|(&x, &y)| f.add(x, f.mul(2, y))).collect();
                shuffled.push(extra);
            }
            prop_assert_eq!(a, Subspace::span(f, 4, &shuffled));
        }

        #[test]
        fn modular_law(ra in arb_rows(2, 4, 3), rb in arb_rows(2, 4, 3), rc in arb_rows(2, 4, 3)) {
            let f = f2();
            let a = Subspace::span(f, 4, &ra);
            let b = Subspace::span(f, 4, &rb);
            let c = a.sum(&Subspace::span(f, 4, &rc)).unwrap();
            let lhs = a.sum(&b.intersection(&c).unwrap()).unwrap();
            let rhs = a.sum(&b).unwrap().intersection(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn preimage_matches_enumeration(m in arb_matrix(2, 4), rows in arb_rows(2, 4, 3)) {
            let f = f2();
            let s = Subspace::span(f, m.cols(), &rows.iter().map(|r| r[..m.cols()].to_vec()).collect::<Vec<_>>());
            let pre = preimage(&m, &s).unwrap();
            let brute: Vec<Vec<u32>> = enumerate_vectors(2, m.rows())
                .into_iter()
                .filter(|v| s.contains_vector(&m.apply(v)))
                .collect();
            prop_assert_eq!(pre.clone(), Subspace::span(f, m.rows(), &brute));
            prop_assert_eq!(pre.elements().len(), brute.len());
        }

        #[test]
        fn solve_agrees_with_row_space(m in arb_matrix(3, 5), t in proptest::collection::vec(0u32..3, 5)) {
            let t = &t[..m.cols()];
            let inside = Subspace::row_space(&m).contains_vector(t);
            match m.solve_left(t) {
                Some(x) => { prop_assert!(inside); prop_assert_eq!(m.apply(&x), t.to_vec()); }
                None => prop_assert!(!inside),
            }
        }
    }
}
