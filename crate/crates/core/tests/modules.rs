//! Properties of tensor products, Hom spaces, annihilators and traces.

mod common;

use common::{algebras, fp, pick, rng, small_prime};
use coringlab_core::linalg::{enumerate_vectors, vector};
use coringlab_core::workbench::random::{random_module, random_nonzero_vector, random_vector};
use coringlab_core::{annihilator, hom_space, projectivity_test, subgenerated_check, trace_sp, Bimodule, Matrix, Side, Subspace, TensorChain};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_unit_law(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let a = pick(&mut r, &algebras(f));
        // a left A-module is a right A^op-module
        let n = random_module(&mut r, &a, 4).opposite();
        let reg = Bimodule::regular(n.left_algebra().clone());
        let chain = TensorChain::pair(&reg, &n).unwrap();
        prop_assert_eq!(chain.dim(), n.dim());
        let unit = reg.left_algebra().unit().to_vec();
        let mut emb = Matrix::zeros(f, n.dim(), chain.dim());
        for j in 0..n.dim() {
            emb.row_mut(j).copy_from_slice(&chain.pure(&[&unit, &vector::unit(n.dim(), j)]));
        }
        prop_assert!(emb.is_invertible());
        for (k, act) in n.left_actions().iter().enumerate() {
            prop_assert_eq!(act.mul(&emb), emb.mul(&chain.module().left_actions()[k]));
        }
    }

    #[test]
    fn hom_basis_is_linear(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let a = pick(&mut r, &algebras(f));
        let m = random_module(&mut r, &a, 3);
        let n = random_module(&mut r, &a, 3);
        let h = hom_space(&m, &n, Side::Right).unwrap();
        for g in h.basis_maps() {
            for (k, act) in m.right_actions().iter().enumerate() {
                prop_assert_eq!(act.mul(&g), g.mul(&n.right_actions()[k]));
            }
        }
    }

    #[test]
    fn annihilator_is_antitone(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let a = pick(&mut r, &algebras(f));
        let m = random_module(&mut r, &a, 4);
        prop_assume!(m.dim() > 0);
        let w1 = Subspace::span(f, m.dim(), &[random_vector(&mut r, f, m.dim())]);
        let w2 = w1.sum(&Subspace::span(f, m.dim(), &[random_vector(&mut r, f, m.dim())])).unwrap();
        let a1 = annihilator(&m, &w1).unwrap();
        let a2 = annihilator(&m, &w2).unwrap();
        prop_assert!(a1.space.contains(&a2.space));
        prop_assert!(a2.is_right_ideal);
    }

    #[test]
    fn trace_is_largest_and_idempotent(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let a = pick(&mut r, &algebras(f));
        let k = random_module(&mut r, &a, 3);
        let m = random_module(&mut r, &a, 4);
        let sp = trace_sp(&k, &m).unwrap();
        prop_assert!(m.is_stable(&sp));
        let (sub, _) = m.submodule(&sp).unwrap();
        prop_assert!(trace_sp(&k, &sub).unwrap().is_full());
        // sampled stable subspaces that are K-subgenerated lie inside
        if m.dim() > 0 {
            for _ in 0..4 {
                let v = random_nonzero_vector(&mut r, f, m.dim());
                let s = m.generated_submodule(&Subspace::span(f, m.dim(), &[v]));
                let (x, _) = m.submodule(&s).unwrap();
                if subgenerated_check(&x, &k).unwrap() {
                    prop_assert!(sp.contains(&s));
                }
            }
        }
    }

    #[test]
    fn field_algebras_are_always_projective(seed in any::<u64>(), p in small_prime()) {
        let f = fp(p);
        let mut r = rng(seed);
        let n = r.gen_range(0..4usize);
        let m = Bimodule::vector_space(f, n);
        prop_assert!(projectivity_test(&m).unwrap().projective);
    }
}

/// Over F_2 with dim M <= 4 every stable subspace is a sum of cyclic ones,
/// so enumerating cyclic submodules is an exhaustive oracle for the trace.
#[test]
fn trace_matches_cyclic_enumeration() {
    let f = fp(2);
    let mut r = rng(11);
    for _ in 0..40 {
        let a = pick(&mut r, &algebras(f));
        let k = random_module(&mut r, &a, 3);
        let m = random_module(&mut r, &a, 4);
        let sp = trace_sp(&k, &m).unwrap();
        let mut acc = Subspace::zero(f, m.dim());
        for v in enumerate_vectors(2, m.dim()) {
            let s = m.generated_submodule(&Subspace::span(f, m.dim(), &[v]));
            let (x, _) = m.submodule(&s).unwrap();
            if subgenerated_check(&x, &k).unwrap() {
                acc = acc.sum(&s).unwrap();
            }
        }
        assert_eq!(acc, sp);
    }
}

/// Projectivity against a search over every map `M -> A^n` (F_2, dim <= 3).
#[test]
fn projectivity_matches_splitting_search() {
    let f = fp(2);
    let mut r = rng(12);
    let mut seen = [0usize; 2];
    for _ in 0..60 {
        let a = pick(&mut r, &algebras(f)[..4]);
        let m = random_module(&mut r, &a, 3);
        let t = projectivity_test(&m).unwrap();
        let free = Bimodule::free_right(a.clone(), m.dim());
        let h = hom_space(&m, &free, Side::Right).unwrap();
        let id = Matrix::identity(f, m.dim());
        let brute = enumerate_vectors(2, h.dim())
            .into_iter()
            .any(|c| h.from_coords(&c).mul(&t.cover) == id);
        assert_eq!(t.projective, brute);
        seen[usize::from(brute)] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "both outcomes occur: {seen:?}");
}

/// `Sp` against its finite-subset form: `m` lies in the trace when some
/// finite `W` in `K` has `m Ann(W) = 0`. Every subset of `K` is tried (F_2,
/// dim K <= 2, dim M <= 3).
#[test]
fn trace_matches_finite_subset_definition() {
    let f = fp(2);
    let mut r = rng(13);
    for _ in 0..30 {
        let a = pick(&mut r, &algebras(f));
        let k = random_module(&mut r, &a, 2);
        let m = random_module(&mut r, &a, 3);
        let elements = enumerate_vectors(2, k.dim());
        let anns: Vec<Subspace> = (0u32..1 << elements.len())
            .map(|mask| {
                let w: Vec<Vec<u32>> = (0..elements.len()).filter(|i| mask >> i & 1 == 1).map(|i| elements[i].clone()).collect();
                annihilator(&k, &Subspace::span(f, k.dim(), &w)).unwrap().space
            })
            .collect();
        let kills = |v: &[u32], ann: &Subspace| ann.basis().row_iter().all(|t| vector::is_zero(&m.right_action(t).apply(v)));
        let members: Vec<Vec<u32>> = enumerate_vectors(2, m.dim())
            .into_iter()
            .filter(|v| anns.iter().any(|ann| kills(v, ann)))
            .collect();
        let sp = trace_sp(&k, &m).unwrap();
        assert_eq!(members.len(), 1 << sp.dim());
        assert_eq!(Subspace::span(f, m.dim(), &members), sp);
    }
}
