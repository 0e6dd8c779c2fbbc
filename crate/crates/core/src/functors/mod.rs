//! The functors between comodule and module categories, and the explicit
//! isomorphisms relating them.

pub mod adjunction;
pub mod center;
pub mod coinduction;
pub mod cotensor;
pub mod general;
pub mod induction;
pub mod instance;

pub use cotensor::{ad_induction, cotensor, cotensor_comodule, cotensor_map, AdInduction, Bicomodule, Cotensor, CotensorComodule};
pub use induction::{corestriction, induction, induction_map, Induced};
pub use general::{CanIso, CoindGeneral, GeneralAdjunction, HomModule, InducedModule, SigmaContext};
pub use coinduction::{coind_compatible, coind_map, coind_measuring, compare_coinductions, CoinductionComparison, Coinduced, CompatibleCoinduction};
pub use adjunction::{tau, verify_natural_iso, AdHom, AdjunctionPair, AdjunctionWitness, NaturalIsoReport, NaturalitySquare, TauInstance};
pub use center::{cotensor_as_center, BilinearPairing, CenterWitness};
pub use instance::{FunctorContext, FunctorInstance, FunctorKind};
