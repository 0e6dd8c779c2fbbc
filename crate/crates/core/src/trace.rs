//! Annihilators, the trace functor `Sp(sigma[K], -)` in finite dimension, and
//! projectivity of one-sided modules.
//!
//! For finite-dimensional `K`, every finite subset `W` of `K` has
//! `Ann(W) >= Ann(K)` with equality when `W` spans `K`, so the trace of `K` in
//! `M` is `{m : m . Ann(K) = 0}`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::hom_space;
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::module::{Bimodule, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilator {
    pub space: Subspace,
    pub is_right_ideal: bool,
    pub is_left_ideal: bool,
}

impl Annihilator {
    pub fn is_ideal(&self) -> bool {
        self.is_left_ideal && self.is_right_ideal
    }
}

/// `{t in T : w . t = 0 for all w in W}` for a right `T`-module.
pub fn annihilator(m: &Bimodule, w: &Subspace) -> Result<Annihilator> {
    if w.ambient() != m.dim() {
        return Err(Error::dims("annihilator: subspace ambient"));
    }
    let t: &Arc<Algebra> = m.right_algebra();
    let f = m.field();
    // row k: concatenation over basis vectors w_i of w_i . e_k
    let mut eqs = Matrix::zeros(f, t.dim(), w.dim() * m.dim());
    for (k, act) in m.right_actions().iter().enumerate() {
        let img = w.basis().mul(act);
        eqs.row_mut(k).copy_from_slice(img.data());
    }
    let space = kernel_basis(&eqs);
    Ok(Annihilator {
        is_right_ideal: t.is_right_ideal(&space),
        is_left_ideal: t.is_left_ideal(&space),
        space,
    })
}

/// `{v in M : v . Ann(K) = 0}`.
pub fn trace_sp(k: &Bimodule, m: &Bimodule) -> Result<Subspace> {
    if k.right_algebra() != m.right_algebra() {
        return Err(Error::AlgebraMismatch("trace: modules over different algebras".into()));
    }
    let ann = annihilator(k, &Subspace::full(k.field(), k.dim()))?;
    let f = m.field();
    if ann.space.is_zero() {
        return Ok(Subspace::full(f, m.dim()));
    }
    let blocks: Vec<Matrix> = ann.space.basis().row_iter().map(|a| m.right_action(a)).collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let sp = kernel_basis(&Matrix::hstack(f, m.dim(), &refs));
    debug_assert!(m.is_stable(&sp));
    Ok(sp)
}

/// Is `x` subgenerated by `l`, i.e. `Sp(sigma[L], X) = X`?
pub fn subgenerated_check(x: &Bimodule, l: &Bimodule) -> Result<bool> {
    Ok(trace_sp(l, x)?.is_full())
}

/// Splitting `s : M -> A^n` of the free cover `A^n -> M` on the basis of `M`.
#[derive(Clone, Debug)]
pub struct Projectivity {
    pub projective: bool,
    /// Cover map `A^n -> M`.
    pub cover: Matrix,
    /// `s` with `s . cover = id`, when it exists.
    pub splitting: Option<Matrix>,
}

/// Projectivity of a right module (use [`Bimodule::opposite`] for left ones).
pub fn projectivity_test(m: &Bimodule) -> Result<Projectivity> {
    let a = m.right_algebra().clone();
    let module = m.as_right();
    let f = m.field();
    let n = m.dim();
    let free = Bimodule::free_right(a.clone(), n);
    // cover: (copy i, e_j) -> m_i . e_j
    let d = a.dim();
    let mut cover = Matrix::zeros(f, n * d, n);
    for i in 0..n {
        for (j, act) in module.right_actions().iter().enumerate() {
            cover.row_mut(i * d + j).copy_from_slice(act.row(i));
        }
    }
    let h = hom_space(&module, &free, Side::Right)?;
    // find coefficients c with sum c_l h_l . cover = id
    let images: Vec<Matrix> = h.basis_maps().iter().map(|s| s.mul(&cover)).collect();
    let mut sys = Matrix::zeros(f, h.dim(), n * n);
    for (l, img) in images.iter().enumerate() {
        sys.row_mut(l).copy_from_slice(img.data());
    }
    let target = Matrix::identity(f, n);
    let splitting = sys.solve_left(target.data()).map(|c: Vec<Scalar>| h.from_coords(&c));
    Ok(Projectivity {
        projective: splitting.is_some(),
        cover,
        splitting,
    })
}

/// Projectivity of `m` as a left module over its left algebra.
pub fn left_projectivity_test(m: &Bimodule) -> Result<Projectivity> {
    projectivity_test(&m.as_left().opposite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::linalg::enumerate_vectors;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    fn dual_numbers() -> Bimodule {
        Bimodule::regular(Arc::new(Algebra::truncated_polynomial(f2(), 2))).as_right()
    }

    fn residue_field() -> Bimodule {
        dual_numbers().quotient(&Subspace::span(f2(), 2, &[vec![0, 1]])).unwrap().0
    }

    #[test]
    fn annihilator_examples() {
        let m = dual_numbers();
        assert!(annihilator(&m, &Subspace::zero(f2(), 2)).unwrap().space.is_full());
        assert!(annihilator(&m, &Subspace::full(f2(), 2)).unwrap().space.is_zero());
        let x = Subspace::span(f2(), 2, &[vec![0, 1]]);
        let ann = annihilator(&m, &x).unwrap();
        assert_eq!(ann.space, x);
        assert!(ann.is_ideal());
    }

    #[test]
    fn trace_examples() {
        let t = dual_numbers();
        let k = residue_field();
        assert!(trace_sp(&t, &k).unwrap().is_full());
        assert_eq!(trace_sp(&k, &t).unwrap(), Subspace::span(f2(), 2, &[vec![0, 1]]));
        let zero = Bimodule::zero_like(&t);
        assert!(trace_sp(&zero, &t).unwrap().is_zero());
        assert!(subgenerated_check(&k, &t).unwrap());
        assert!(!subgenerated_check(&t, &k).unwrap());
        assert!(subgenerated_check(&zero, &k).unwrap());
    }

    #[test]
    fn projectivity_examples() {
        assert!(projectivity_test(&dual_numbers()).unwrap().projective);
        assert!(!projectivity_test(&residue_field()).unwrap().projective);
        let f4 = Arc::new(Algebra::f4());
        let m = Bimodule::free_right(f4, 2);
        let p = projectivity_test(&m).unwrap();
        assert!(p.projective);
        let s = p.splitting.unwrap();
        assert_eq!(s.mul(&p.cover), Matrix::identity(m.field(), m.dim()));
    }

    /// Finite-subset definition: `m` is in the trace iff some finite `W`
    /// has `Ann(W) <= Ann(m)`; over `F_2` all subsets are enumerable.
    fn brute_trace(k: &Bimodule, m: &Bimodule) -> Subspace {
        let f = m.field();
        let kvecs = enumerate_vectors(2, k.dim());
        let n = kvecs.len();
        let mut members = Vec::new();
        for v in enumerate_vectors(2, m.dim()) {
            let ann_v = annihilator(m, &Subspace::span(f, m.dim(), std::slice::from_ref(&v))).unwrap().space;
            let ok = (0u32..(1 << n)).any(|mask| {
                let w: Vec<Vec<u32>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| kvecs[i].clone()).collect();
                let ann_w = annihilator(k, &Subspace::span(f, k.dim(), &w)).unwrap().space;
                ann_v.contains(&ann_w)
            });
            if ok {
                members.push(v);
            }
        }
        Subspace::span(f, m.dim(), &members)
    }

    #[test]
    fn finite_collapse_matches_subset_definition() {
        let t = dual_numbers();
        let k = residue_field();
        let sum = t.direct_sum(&k).unwrap();
        for (kk, mm) in [(&k, &t), (&t, &k), (&k, &sum), (&t, &sum), (&k, &k)] {
            assert_eq!(trace_sp(kk, mm).unwrap(), brute_trace(kk, mm));
        }
    }
}
