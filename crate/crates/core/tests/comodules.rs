//! Dual rings, the sharp bimodule, and rational modules.

mod common;

use common::{corings, fp, pick, rng, same_base_morphism, small_prime};
use coringlab_core::dual::{DualRing, DualSide};
use coringlab_core::pairing::MeasuringPairing;
use coringlab_core::sharp::SharpSpaces;
use coringlab_core::workbench::random::{random_module, random_vector, ComoduleSampler};
use coringlab_core::{hom_colinear, hom_space, trace_sp, Side};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn dual_rings_are_algebras(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let c = pick(&mut r, &corings(f));
        for side in [DualSide::Left, DualSide::Right, DualSide::Bi] {
            let d = DualRing::new(c.clone(), side).unwrap();
            prop_assert!(d.algebra.validate().is_ok(), "{:?}", side);
        }
    }

    #[test]
    fn sharp_bimodule_laws(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let phi = same_base_morphism(&mut r, f);
        let s = SharpSpaces::new(&phi).unwrap();
        prop_assert!(s.validate().is_ok());
        let (nc, nd, nh) = (s.dual_c.dim(), s.dual_d.dim(), s.hash_c.dim());
        let a = random_vector(&mut r, f, nc);
        let b = random_vector(&mut r, f, nc);
        let g = random_vector(&mut r, f, nd);
        let h = random_vector(&mut r, f, nh);
        // (f -> h) <- g == f -> (h <- g)
        prop_assert_eq!(s.right(&s.left(&a, &h), &g), s.left(&a, &s.right(&h, &g)));
        // (a *l b) -> h == a -> (b -> h)
        let ab = s.dual_c.algebra.mul(&a, &b);
        prop_assert_eq!(s.left(&ab, &h), s.left(&a, &s.left(&b, &h)));
        // the two cyclic generators meet at beta . eps_C = eps_D . theta
        let one_c = s.dual_c.algebra.unit().to_vec();
        let one_d = s.dual_d.algebra.unit().to_vec();
        prop_assert_eq!(s.beta_comp.apply(&one_c), s.theta_comp.apply(&one_d));
        // right(beta . a, g) == left(a, g . theta)
        prop_assert_eq!(
            s.right(&s.beta_comp.apply(&a), &g),
            s.left(&a, &s.theta_comp.apply(&g))
        );
        // same base morphisms are always compatible
        prop_assert!(s.compatible);
    }

    #[test]
    fn rat_is_an_idempotent_submodule(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let c = pick(&mut r, &corings(f));
        let q = MeasuringPairing::canonical(c).unwrap();
        let m = random_module(&mut r, &q.t, 4);
        let rat = q.rat(&m).unwrap();
        prop_assert!(m.is_stable(&rat.space));
        prop_assert!(rat.comodule.validate().is_ok());
        prop_assert!(q.rat(&rat.module).unwrap().space.is_full());
    }

    #[test]
    fn rat_equals_trace_of_coring(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let c = pick(&mut r, &corings(f));
        let q = MeasuringPairing::canonical(c).unwrap();
        prop_assume!(q.alpha.holds());
        let m = random_module(&mut r, &q.t, 4);
        let rat = q.rat(&m).unwrap();
        let sp = trace_sp(&q.coring_module(), &m.as_right()).unwrap();
        prop_assert_eq!(rat.space, sp);
    }

    #[test]
    fn colinear_maps_are_dual_ring_maps(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let c = pick(&mut r, &corings(f));
        let sampler = ComoduleSampler::new(c.clone()).unwrap();
        let m = sampler.sample(&mut r, 3).unwrap();
        let n = sampler.sample(&mut r, 3).unwrap();
        let q = MeasuringPairing::canonical(c).unwrap();
        let colinear = hom_colinear(&m, &n).unwrap();
        let linear = hom_space(
            &q.module_from_comodule(&m).unwrap(),
            &q.module_from_comodule(&n).unwrap(),
            Side::Right,
        ).unwrap();
        prop_assert_eq!(colinear.space(), linear.space());
        for g in colinear.basis_maps() {
            prop_assert!(m.is_colinear(&n, &g));
        }
    }

    #[test]
    fn canonical_modules_of_comodules_are_rational(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let c = pick(&mut r, &corings(f));
        let m = ComoduleSampler::new(c.clone()).unwrap().sample(&mut r, 3).unwrap();
        let q = MeasuringPairing::canonical(c).unwrap();
        let module = q.module_from_comodule(&m).unwrap();
        prop_assert!(q.rat(&module).unwrap().space.is_full());
        let back = q.comodule_from_module(&module).unwrap();
        prop_assert_eq!(back.rho(), m.rho());
    }
}
