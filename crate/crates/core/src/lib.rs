//! Exact finite-field workbench for corings, comodules, their dual rings and
//! the induction and coinduction functors between comodule categories.
//!
//! Conventions: vectors are rows and maps act on the right, so the matrix of
//! a map `V -> W` is `dim V x dim W` and "first `f`, then `g`" is `F . G`.

pub mod algebra;
pub mod comodule;
pub mod coring;
pub mod dual;
pub mod error;
pub mod field;
pub mod functors;
pub mod hom;
pub mod linalg;
pub mod module;
pub mod morphism;
pub mod pairing;
pub mod report;
pub mod sharp;
pub mod tensor;
pub mod trace;
pub mod workbench;

pub use algebra::{Algebra, AlgebraMorphism};
pub use error::{Error, Result};
pub use field::{Fp, Scalar};
pub use hom::{hom_space, HomSpace};
pub use linalg::{kernel_basis, preimage, solve_linear, Matrix, Subspace};
pub use module::{Bimodule, Side};
pub use report::{Status, Validation, Verdict};
pub use tensor::{base_change_chi, tensor_over, TensorChain};
pub use trace::{annihilator, projectivity_test, subgenerated_check, trace_sp};
pub use comodule::{hom_colinear, Comodule, LeftComodule};
pub use coring::Coring;
pub use dual::{DualRing, DualSide};
pub use morphism::CoringMorphism;
pub use pairing::{AlphaCheck, MeasuringPairing, PairingMorphism, Rational};
pub use sharp::{sharp_spaces, SharpSpaces};
pub use functors::{
    ad_induction, coind_compatible, coind_measuring, corestriction, cotensor, cotensor_as_center, induction,
    verify_natural_iso, BilinearPairing, CompatibleCoinduction, FunctorContext, FunctorInstance, FunctorKind,
    SigmaContext,
};
pub use workbench::{
    compute, gallery, parse_model, print_model, run_suite, validate_model, ModelFile, Suite, SuiteConfig,
    VerdictReport,
};
