//! Seeded random instances.
//!
//! Comodules are drawn as subquotients of `C^k`: generate a subcomodule from
//! a random vector, then keep either it or the quotient by it until the
//! dimension bound is met. Modules are drawn the same way from free modules.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::comodule::{Comodule, LeftComodule};
use crate::coring::Coring;
use crate::error::Result;
use crate::field::{Fp, Scalar};
use crate::hom::HomSpace;
use crate::linalg::{Matrix, Subspace};
use crate::module::Bimodule;
use crate::morphism::CoringMorphism;
use crate::pairing::MeasuringPairing;

/// Independent generator for trial `trial` of the named stream.
pub fn trial_rng(seed: u64, stream: &str, trial: usize) -> ChaCha8Rng {
    // FNV-1a, fixed so that reports do not depend on the std hasher
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(trial as u64);
    rng
}

pub fn random_vector(rng: &mut impl Rng, f: Fp, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| rng.gen_range(0..f.p())).collect()
}

pub fn random_nonzero_vector(rng: &mut impl Rng, f: Fp, n: usize) -> Vec<Scalar> {
    assert!(n > 0, "no nonzero vectors in the zero space");
    loop {
        let v = random_vector(rng, f, n);
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

pub fn random_matrix(rng: &mut impl Rng, f: Fp, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.p())).collect();
    Matrix::from_vec(f, rows, cols, data)
}

/// A random element of a Hom space.
pub fn random_element(rng: &mut impl Rng, h: &HomSpace) -> Matrix {
    h.from_coords(&random_vector(rng, h.field(), h.dim()))
}

/// A random nonzero element, if the space is nonzero.
pub fn random_nonzero_element(rng: &mut impl Rng, h: &HomSpace) -> Option<Matrix> {
    (h.dim() > 0).then(|| h.from_coords(&random_nonzero_vector(rng, h.field(), h.dim())))
}

const ATTEMPTS: usize = 24;

/// A random right `A`-module of dimension at most `max_dim` (left side the
/// ground field).
pub fn random_module(rng: &mut impl Rng, a: &Arc<Algebra>, max_dim: usize) -> Bimodule {
    let f = a.field();
    for _ in 0..ATTEMPTS {
        let k = rng.gen_range(1..=2);
        let mut x = Bimodule::free_right(a.clone(), k);
        while x.dim() > 0 {
            if x.dim() <= max_dim && rng.gen_bool(0.6) {
                return x;
            }
            let v = random_nonzero_vector(rng, f, x.dim());
            let s = x.generated_submodule(&Subspace::span(f, x.dim(), &[v]));
            if s.dim() <= max_dim && rng.gen_bool(0.5) {
                x = x.submodule(&s).expect("generated submodules are stable").0;
            } else if s.dim() < x.dim() {
                x = x.quotient(&s).expect("generated submodules are stable").0;
            } else if x.dim() <= max_dim {
                return x;
            }
        }
    }
    Bimodule::free_right(a.clone(), 0)
}

/// Draws comodules over a coring through its canonical pairing, where
/// subcomodules are the `*C`-submodules.
#[derive(Clone, Debug)]
pub struct ComoduleSampler {
    pub coring: Arc<Coring>,
    pairing: MeasuringPairing,
}

impl ComoduleSampler {
    pub fn new(coring: Arc<Coring>) -> Result<Self> {
        let pairing = MeasuringPairing::canonical(coring.clone())?;
        Ok(ComoduleSampler { coring, pairing })
    }

    /// The subcomodule generated by `v`.
    pub fn generated(&self, m: &Comodule, v: &[Scalar]) -> Result<Subspace> {
        let module = self.pairing.module_from_comodule(m)?;
        let f = m.carrier().field();
        Ok(module.generated_submodule(&Subspace::span(f, m.dim(), &[v.to_vec()])))
    }

    pub fn sample(&self, rng: &mut impl Rng, max_dim: usize) -> Result<Comodule> {
        let f = self.coring.field();
        // forget the left action so that subcomodules need only be right stable
        let c = &self.coring;
        let regular = Comodule::new(c.clone(), c.carrier().as_right(), c.delta().clone())?;
        for _ in 0..ATTEMPTS {
            let mut x = regular.clone();
            if rng.gen_bool(0.4) {
                x = x.direct_sum(&regular)?;
            }
            while x.dim() > 0 {
                if x.dim() <= max_dim && rng.gen_bool(0.6) {
                    return Ok(x);
                }
                let v = random_nonzero_vector(rng, f, x.dim());
                let s = self.generated(&x, &v)?;
                if s.dim() <= max_dim && rng.gen_bool(0.5) {
                    x = x.restrict(&s)?.0;
                } else if s.dim() < x.dim() {
                    x = x.quotient(&s)?.0;
                } else if x.dim() <= max_dim {
                    return Ok(x);
                }
            }
        }
        Ok(regular.restrict(&Subspace::zero(f, regular.dim()))?.0)
    }

    /// A random subcomodule with its inclusion.
    pub fn sub(&self, rng: &mut impl Rng, m: &Comodule) -> Result<(Comodule, Matrix)> {
        let s = self.random_subspace(rng, m)?;
        m.restrict(&s)
    }

    /// A random quotient with its projection.
    pub fn quotient(&self, rng: &mut impl Rng, m: &Comodule) -> Result<(Comodule, Matrix)> {
        let s = self.random_subspace(rng, m)?;
        m.quotient(&s)
    }

    fn random_subspace(&self, rng: &mut impl Rng, m: &Comodule) -> Result<Subspace> {
        let f = m.carrier().field();
        if m.dim() == 0 {
            return Ok(Subspace::zero(f, 0));
        }
        self.generated(m, &random_vector(rng, f, m.dim()))
    }
}

/// Left comodules drawn as right comodules over the opposite coring.
#[derive(Clone, Debug)]
pub struct LeftComoduleSampler {
    coring: Arc<Coring>,
    opposite: ComoduleSampler,
}

impl LeftComoduleSampler {
    pub fn new(coring: Arc<Coring>) -> Result<Self> {
        let opposite = ComoduleSampler::new(Arc::new(coring.opposite()))?;
        Ok(LeftComoduleSampler { coring, opposite })
    }

    pub fn sample(&self, rng: &mut impl Rng, max_dim: usize) -> Result<LeftComodule> {
        let c = self.opposite.sample(rng, max_dim)?;
        LeftComodule::from_opposite(self.coring.clone(), &c)
    }
}

/// `G_n -> G_m`, `g_i -> g_{s(i)}` for a random map `s`, between grouplike
/// corings over `F_p`.
pub fn random_grouplike_morphism(rng: &mut impl Rng, f: Fp, max_n: usize) -> CoringMorphism {
    let n = rng.gen_range(1..=max_n.max(1));
    let m = rng.gen_range(1..=n);
    let c = Arc::new(Coring::grouplike(f, n));
    let d = Arc::new(Coring::grouplike(f, m));
    // surjective: every target grouplike is hit
    let mut s: Vec<usize> = (0..n).map(|i| if i < m { i } else { rng.gen_range(0..m) }).collect();
    s.shuffle(rng);
    let mut theta = Matrix::zeros(f, n, m);
    for (i, &j) in s.iter().enumerate() {
        theta.set(i, j, 1);
    }
    let beta = AlgebraMorphism::identity(c.base().clone());
    CoringMorphism::new(c, d, beta, theta).expect("shapes agree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_valid_and_bounded() {
        let f = Fp::new(3).unwrap();
        let s = ComoduleSampler::new(Arc::new(Coring::grouplike(f, 2))).unwrap();
        let mut rng = trial_rng(1, "test", 0);
        for _ in 0..20 {
            let m = s.sample(&mut rng, 3).unwrap();
            assert!(m.dim() <= 3);
            assert!(m.validate().is_ok());
        }
        let l = LeftComoduleSampler::new(Arc::new(Coring::sweedler(Arc::new(Algebra::f4())))).unwrap();
        for _ in 0..5 {
            let n = l.sample(&mut rng, 4).unwrap();
            assert!(n.dim() <= 4);
            assert!(n.validate().is_ok());
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u32> = random_vector(&mut trial_rng(7, "x", 3), Fp::new(5).unwrap(), 8);
        let b: Vec<u32> = random_vector(&mut trial_rng(7, "x", 3), Fp::new(5).unwrap(), 8);
        let c: Vec<u32> = random_vector(&mut trial_rng(7, "x", 4), Fp::new(5).unwrap(), 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn modules_over_dual_numbers() {
        let f = Fp::new(2).unwrap();
        let t = Arc::new(Algebra::truncated_polynomial(f, 2));
        let mut rng = trial_rng(3, "m", 0);
        for _ in 0..20 {
            let m = random_module(&mut rng, &t, 3);
            assert!(m.dim() <= 3);
            assert!(m.validate().is_ok());
        }
    }
}
