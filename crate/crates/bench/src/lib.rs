//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use coringlab_core::workbench::gallery::gallery_file;
use coringlab_core::workbench::random::{random_matrix, trial_rng, ComoduleSampler};
use coringlab_core::{Comodule, Coring, CoringMorphism, Fp, Matrix, ModelFile};

pub fn model(name: &str) -> ModelFile {
    gallery_file(name).expect("gallery builds").model
}

/// A seeded `n x n` matrix over `F_p`.
pub fn square(p: u32, n: usize, seed: u64) -> Matrix {
    let f = Fp::new(p).expect("prime");
    random_matrix(&mut trial_rng(seed, "bench-matrix", n), f, n, n)
}

/// `k` seeded comodules over the grouplike coring on `n` elements.
pub fn grouplike_comodules(p: u32, n: usize, k: usize, max_dim: usize) -> (Arc<Coring>, Vec<Comodule>) {
    let f = Fp::new(p).expect("prime");
    let c = Arc::new(Coring::grouplike(f, n));
    let s = ComoduleSampler::new(c.clone()).expect("grouplike pairing");
    let ms = (0..k)
        .map(|i| s.sample(&mut trial_rng(7, "bench-comodule", i), max_dim).expect("sample"))
        .collect();
    (c, ms)
}

/// The counit `G_n -> K` over `F_p`.
pub fn counit(p: u32, n: usize) -> CoringMorphism {
    let f = Fp::new(p).expect("prime");
    CoringMorphism::counit_to_trivial(Arc::new(Coring::grouplike(f, n)))
}
