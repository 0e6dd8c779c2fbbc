#![allow(dead_code)]

use std::sync::Arc;

use coringlab_core::morphism::CoringMorphism;
use coringlab_core::workbench::random::{random_grouplike_morphism, trial_rng};
use coringlab_core::{Algebra, AlgebraMorphism, Coring, Fp};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fp(p: u32) -> Fp {
    Fp::new(p).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    trial_rng(seed, "integration", 0)
}

pub fn small_prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5])
}

/// Small algebras over `f`, commutative and not.
pub fn algebras(f: Fp) -> Vec<Arc<Algebra>> {
    let mut out = vec![
        Arc::new(Algebra::ground(f)),
        Arc::new(Algebra::truncated_polynomial(f, 2)),
        Arc::new(Algebra::truncated_polynomial(f, 3)),
        Arc::new(Algebra::diagonal(f, 2)),
        Arc::new(Algebra::matrix_algebra(f, 2)),
    ];
    if f.p() == 2 {
        out.push(Arc::new(Algebra::f4()));
    }
    out
}

pub fn pick<T: Clone>(rng: &mut impl Rng, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())].clone()
}

/// Corings whose canonical pairings satisfy the alpha-condition.
pub fn corings(f: Fp) -> Vec<Arc<Coring>> {
    let mut out = vec![
        Arc::new(Coring::grouplike(f, 1)),
        Arc::new(Coring::grouplike(f, 2)),
        Arc::new(Coring::grouplike(f, 3)),
        Arc::new(Coring::trivial(Arc::new(Algebra::truncated_polynomial(f, 2)))),
    ];
    if f.p() == 2 {
        let f4 = Arc::new(Algebra::f4());
        out.push(Arc::new(Coring::sweedler(f4.clone())));
        out.push(Arc::new(Coring::trivial(f4)));
    }
    out
}

/// The corings above whose base lands in the centre of `*C`; the Sweedler
/// coring over F_4 is the one that does not.
pub fn central_corings(f: Fp) -> Vec<Arc<Coring>> {
    corings(f).into_iter().filter(|c| !(c.base().dim() > 1 && c.dim() > c.base().dim())).collect()
}

fn morphism_over(rng: &mut impl Rng, f: Fp, cs: &[Arc<Coring>]) -> CoringMorphism {
    match rng.gen_range(0..3) {
        0 => random_grouplike_morphism(rng, f, 3),
        1 => CoringMorphism::counit_to_trivial(pick(rng, cs)),
        _ => CoringMorphism::identity(pick(rng, cs)),
    }
}

/// Morphisms over one base: grouplike maps, counits, identities.
pub fn same_base_morphism(rng: &mut impl Rng, f: Fp) -> CoringMorphism {
    morphism_over(rng, f, &corings(f))
}

/// As `same_base_morphism`, restricted to `central_corings`.
pub fn central_morphism(rng: &mut impl Rng, f: Fp) -> CoringMorphism {
    morphism_over(rng, f, &central_corings(f))
}

pub fn f2_into_f4() -> AlgebraMorphism {
    let f = fp(2);
    let m = coringlab_core::Matrix::from_vec(f, 1, 2, vec![1, 0]);
    AlgebraMorphism::new(Arc::new(Algebra::ground(f)), Arc::new(Algebra::f4()), m).unwrap()
}
