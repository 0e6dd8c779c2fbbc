//! The `(*C, *D)`-bimodule `#C = Hom_{A-}(C, B)` attached to a coring
//! morphism `(theta : beta) : (C : A) -> (D : B)`, and its two cyclic
//! subspaces
//!
//! * `_#C = { beta . f : f in *C } = *C -> (beta . eps_C)`
//! * `_#D = { g . theta : g in *D } = (eps_D . theta) <- *D`
//!
//! Actions: `(f -> h)(c) = sum h(c1 f(c2))`, `(h <- g)(c) = sum g(theta(c1) h(c2))`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::dual::{DualRing, DualSide};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::{hom_space, HomSpace};
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::module::{Bimodule, Side};
use crate::morphism::CoringMorphism;
use crate::report::Validation;
use crate::tensor::act_grid;

#[derive(Clone, Debug)]
pub struct SharpSpaces {
    pub morphism: CoringMorphism,
    pub dual_c: Arc<DualRing>,
    pub dual_d: Arc<DualRing>,
    /// `#C` inside the `dim C x dim B` matrices.
    pub hom: HomSpace,
    /// `#C` in coordinates, left `*C`, right `*D`.
    pub hash_c: Bimodule,
    /// `f -> beta . f`, `dim *C x dim #C`.
    pub beta_comp: Matrix,
    /// `g -> g . theta`, `dim *D x dim #C`.
    pub theta_comp: Matrix,
    /// `_#C` in `#C` coordinates.
    pub img_beta: Subspace,
    /// `_#D` in `#C` coordinates.
    pub img_theta: Subspace,
    pub cyclic_c: bool,
    pub cyclic_d: bool,
    pub compatible: bool,
    /// The ring structure transported to `_#C` (basis of `img_beta`), or the
    /// reason it does not descend.
    pub ring: std::result::Result<Arc<Algebra>, Error>,
}

impl SharpSpaces {
    pub fn new(phi: &CoringMorphism) -> Result<Self> {
        let c = phi.source.clone();
        let d = phi.target.clone();
        let f = c.field();
        let b = d.base().clone();
        let b_over_a = Bimodule::regular(b.clone()).as_left().restrict(&phi.beta, Side::Left)?;
        let hom = hom_space(&c.carrier().as_left(), &b_over_a, Side::Left)?;
        let dual_c = Arc::new(DualRing::new(c.clone(), DualSide::Left)?);
        let dual_d = Arc::new(DualRing::new(d.clone(), DualSide::Left)?);

        let dl = c.delta_raw();
        let theta_grid = phi.theta.kron(&Matrix::identity(f, c.dim()));
        let left_of = |fc: &Matrix, h: &Matrix| dl.mul(&c.right_eval_grid(fc)).mul(h);
        let right_of = |h: &Matrix, g: &Matrix| {
            let grid = act_grid(f, d.dim(), d.carrier().right_actions(), h);
            dl.mul(&theta_grid).mul(&grid).mul(g)
        };

        let fc: Vec<Matrix> = (0..dual_c.dim()).map(|k| dual_c.basis_functional(k)).collect();
        let gd: Vec<Matrix> = (0..dual_d.dim()).map(|k| dual_d.basis_functional(k)).collect();
        let left_act = hom.action_matrices(fc.len(), |k, h| left_of(&fc[k], h))?;
        let right_act = hom.action_matrices(gd.len(), |k, h| right_of(h, &gd[k]))?;
        let hash_c = Bimodule::new(hom.dim(), dual_c.algebra.clone(), dual_d.algebra.clone(), left_act, right_act)?;

        let to_coords = |maps: &[Matrix], what: &str| -> Result<Matrix> {
            let mut out = Matrix::zeros(f, maps.len(), hom.dim());
            for (k, m) in maps.iter().enumerate() {
                out.row_mut(k).copy_from_slice(&hom.coords_or(m, what)?);
            }
            Ok(out)
        };
        let beta_comp = to_coords(&fc.iter().map(|x| x.mul(&phi.beta.map)).collect::<Vec<_>>(), "beta . f")?;
        let theta_comp = to_coords(&gd.iter().map(|g| phi.theta.mul(g)).collect::<Vec<_>>(), "g . theta")?;
        let img_beta = Subspace::row_space(&beta_comp);
        let img_theta = Subspace::row_space(&theta_comp);

        let u_beta = hom.coords_or(&c.eps().mul(&phi.beta.map), "beta . eps_C")?;
        let u_theta = hom.coords_or(&phi.theta.mul(d.eps()), "eps_D . theta")?;
        let orbit = |acts: &[Matrix], u: &[Scalar]| {
            let rows: Vec<Vec<Scalar>> = acts.iter().map(|a| a.apply(u)).collect();
            Subspace::span(f, hom.dim(), &rows)
        };
        let cyclic_c = orbit(hash_c.left_actions(), &u_beta) == img_beta;
        let cyclic_d = orbit(hash_c.right_actions(), &u_theta) == img_theta;
        let compatible = img_beta.contains(&img_theta);

        let ring = transported_ring(&dual_c, &beta_comp, &img_beta);
        Ok(SharpSpaces {
            morphism: phi.clone(),
            dual_c,
            dual_d,
            hom,
            hash_c,
            beta_comp,
            theta_comp,
            img_beta,
            img_theta,
            cyclic_c,
            cyclic_d,
            compatible,
            ring,
        })
    }

    /// `h` as a map `C -> B`.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        self.hom.from_coords(coords)
    }

    /// `f -> h` for `f` in `*C` (coordinates) and `h` in `#C` (coordinates).
    pub fn left(&self, f: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        self.hash_c.left_action(f).apply(h)
    }

    /// `h <- g` for `g` in `*D`.
    pub fn right(&self, h: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        self.hash_c.right_action(g).apply(h)
    }

    /// `_#C` as a `(*C, *D)`-bimodule with its inclusion into `#C`.
    pub fn sub_c(&self) -> Result<(Bimodule, Matrix)> {
        if !self.compatible {
            return Err(Error::hypothesis(self.incompatibility()));
        }
        self.hash_c.submodule(&self.img_beta)
    }

    /// Human-readable reason for incompatibility.
    pub fn incompatibility(&self) -> String {
        format!(
            "not compatible: _#D (dim {}) is not contained in _#C (dim {})",
            self.img_theta.dim(),
            self.img_beta.dim()
        )
    }

    /// The structural claims: actions commute, cyclic descriptions, and
    /// stability of `_#C` when compatible.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::new("sharp spaces");
        v.merge(self.hash_c.validate());
        for (k, l) in self.hash_c.left_actions().iter().enumerate() {
            for (j, r) in self.hash_c.right_actions().iter().enumerate() {
                v.check(l.mul(r) == r.mul(l), || {
                    format!("left action of f_{k} and right action of g_{j} do not commute")
                });
            }
        }
        v.check(self.cyclic_c, || "_#C differs from *C -> (beta . eps_C)".into());
        v.check(self.cyclic_d, || "_#D differs from (eps_D . theta) <- *D".into());
        if self.compatible {
            v.check(self.hash_c.is_stable(&self.img_beta), || "_#C is not a sub-bimodule".into());
            if let Err(e) = &self.ring {
                v.check(false, || e.to_string());
            }
        }
        v
    }
}

/// `(beta . f) * (beta . g) := beta . (f * g)` on `img`, checked for
/// independence of representatives.
fn transported_ring(dual: &DualRing, beta_comp: &Matrix, img: &Subspace) -> std::result::Result<Arc<Algebra>, Error> {
    let f = beta_comp.field();
    let a = &dual.algebra;
    let ker = kernel_basis(beta_comp);
    for z in ker.basis().row_iter() {
        for k in 0..a.dim() {
            let e = crate::linalg::vector::unit(a.dim(), k);
            for (prod, side) in [(a.mul(z, &e), "left"), (a.mul(&e, z), "right")] {
                if !beta_comp.apply(&prod).iter().all(|&x| x == 0) {
                    return Err(Error::IllDefined(format!(
                        "product on _#C depends on representatives: kernel element {z:?} times basis f_{k} on the {side} is not in the kernel"
                    )));
                }
            }
        }
    }
    let n = img.dim();
    let reps: Vec<Vec<Scalar>> = img
        .basis()
        .row_iter()
        .map(|r| beta_comp.solve_left(r).expect("basis of the image has preimages"))
        .collect();
    let coords = |x: &[Scalar]| -> std::result::Result<Vec<Scalar>, Error> {
        img.coordinates(&beta_comp.apply(x))
            .ok_or_else(|| Error::consistency("product left the image of beta . -"))
    };
    let mut mul = vec![0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let c = coords(&a.mul(&reps[i], &reps[j]))?;
            mul[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&c);
        }
    }
    let unit = coords(a.unit())?;
    Ok(Arc::new(Algebra::new(f, n, mul, unit)?))
}

/// `sharp_spaces` as a free function.
pub fn sharp_spaces(phi: &CoringMorphism) -> Result<SharpSpaces> {
    SharpSpaces::new(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraMorphism;
    use crate::coring::Coring;
    use crate::field::Fp;
    use crate::linalg::enumerate_vectors;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn identity_morphism() {
        let c = Arc::new(Coring::grouplike(f2(), 3));
        let s = sharp_spaces(&CoringMorphism::identity(c)).unwrap();
        assert_eq!(s.hom.dim(), 3);
        assert_eq!(s.img_beta.dim(), 3);
        assert_eq!(s.img_theta, s.img_beta);
        assert!(s.compatible);
        assert!(s.validate().is_ok(), "{}", s.validate().summary());
    }

    #[test]
    fn counit_of_grouplike() {
        let c = Arc::new(Coring::grouplike(f2(), 2));
        let s = sharp_spaces(&CoringMorphism::counit_to_trivial(c)).unwrap();
        assert_eq!(s.img_beta.dim(), 2);
        assert_eq!(s.img_theta.dim(), 1);
        assert!(s.compatible);
        assert!(s.validate().is_ok(), "{}", s.validate().summary());
        assert_eq!(s.ring.as_ref().unwrap().dim(), 2);
    }

    #[test]
    fn base_change_f2_f4_is_incompatible() {
        let beta = AlgebraMorphism::unit_map(Arc::new(Algebra::f4()));
        let s = sharp_spaces(&CoringMorphism::base_change(beta)).unwrap();
        assert_eq!(s.hom.dim(), 2);
        assert_eq!(s.img_beta.dim(), 1);
        assert_eq!(s.img_theta.dim(), 2);
        assert!(!s.compatible);
        assert!(s.cyclic_c && s.cyclic_d);
        assert!(s.sub_c().is_err());
    }

    #[test]
    fn sweedler_counit_mixed_laws() {
        let c = Arc::new(Coring::sweedler(Arc::new(Algebra::f4())));
        let phi = CoringMorphism::counit_to_trivial(c);
        let s = sharp_spaces(&phi).unwrap();
        assert!(s.validate().is_ok(), "{}", s.validate().summary());
        // (beta . f) <- g = f -> (g . theta), exhaustively over F_2
        for fc in enumerate_vectors(2, s.dual_c.dim()) {
            for g in enumerate_vectors(2, s.dual_d.dim()) {
                let lhs = s.right(&s.beta_comp.apply(&fc), &g);
                let rhs = s.left(&fc, &s.theta_comp.apply(&g));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
