//! A functor together with the data it is built from.

use std::fmt;

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::module::Bimodule;
use crate::morphism::CoringMorphism;
use crate::pairing::PairingMorphism;
use crate::report::Validation;

use super::coinduction::{coind_measuring, CompatibleCoinduction};
use super::cotensor::{require_regime, AdInduction};
use super::general::SigmaContext;
use super::induction::{corestriction, induction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctorKind {
    Induction,
    Corestriction,
    AdInduction,
    CoindGeneral,
    CoindMeasuring,
    CoindCompatible,
}

impl FunctorKind {
    pub const ALL: [FunctorKind; 6] = [
        FunctorKind::Induction,
        FunctorKind::Corestriction,
        FunctorKind::AdInduction,
        FunctorKind::CoindGeneral,
        FunctorKind::CoindMeasuring,
        FunctorKind::CoindCompatible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctorKind::Induction => "induction",
            FunctorKind::Corestriction => "corestriction",
            FunctorKind::AdInduction => "ad_induction",
            FunctorKind::CoindGeneral => "coind_general",
            FunctorKind::CoindMeasuring => "coind_measuring",
            FunctorKind::CoindCompatible => "coind_compatible",
        }
    }
}

impl fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub enum FunctorContext {
    Coring(CoringMorphism),
    Pairing(PairingMorphism),
    /// `(K, L, xi)`: right `T`- and `S`-modules with the ring data.
    General { sigma: Box<SigmaContext>, k: Bimodule, l: Bimodule },
}

#[derive(Clone, Debug)]
pub struct FunctorInstance {
    pub kind: FunctorKind,
    pub context: FunctorContext,
    /// Prerequisites (alpha conditions, compatibility, regime) as checked.
    pub prerequisites: Validation,
}

impl FunctorInstance {
    pub fn new(kind: FunctorKind, context: FunctorContext) -> Result<Self> {
        let mut v = Validation::new(kind.name());
        use FunctorKind::*;
        match (&context, kind) {
            (FunctorContext::Coring(phi), Induction | Corestriction | AdInduction | CoindCompatible) => {
                let base = phi.validate();
                if !base.is_ok() {
                    return Err(Error::hypothesis(base.summary()));
                }
                match kind {
                    Corestriction => v.check(phi.is_same_base(), || "beta is not the identity".into()),
                    AdInduction => {
                        let r = require_regime(&phi.source);
                        v.check(r.is_ok(), || r.unwrap_err().to_string());
                    }
                    CoindCompatible => {
                        let r = CompatibleCoinduction::new(phi);
                        v.check(r.is_ok(), || r.unwrap_err().to_string());
                    }
                    _ => {}
                }
            }
            (FunctorContext::Pairing(pm), CoindMeasuring) => {
                let base = pm.validate();
                if !base.is_ok() {
                    return Err(Error::hypothesis(base.summary()));
                }
                v.check(pm.source.alpha.holds(), || format!("source pairing: {}", pm.source.alpha.reason()));
                v.check(pm.target.alpha.holds(), || format!("target pairing: {}", pm.target.alpha.reason()));
            }
            (FunctorContext::General { k, l, sigma }, CoindGeneral) => {
                v.check(*k.right_algebra() == sigma.t, || "K is not a right T-module".into());
                v.check(*l.right_algebra() == sigma.s, || "L is not a right S-module".into());
            }
            _ => return Err(Error::hypothesis(format!("{kind} cannot be built from this context"))),
        }
        Ok(FunctorInstance {
            kind,
            context,
            prerequisites: v,
        })
    }

    fn ready(&self) -> Result<()> {
        if self.prerequisites.is_ok() {
            Ok(())
        } else {
            Err(Error::hypothesis(self.prerequisites.summary()))
        }
    }

    /// Applies a comodule functor.
    pub fn apply(&self, x: &Comodule) -> Result<Comodule> {
        self.ready()?;
        match (&self.context, self.kind) {
            (FunctorContext::Coring(phi), FunctorKind::Induction) => Ok(induction(phi, x)?.comodule),
            (FunctorContext::Coring(phi), FunctorKind::Corestriction) => corestriction(phi, x),
            (FunctorContext::Coring(phi), FunctorKind::AdInduction) => Ok(AdInduction::new(phi)?.apply(x)?.comodule),
            (FunctorContext::Coring(phi), FunctorKind::CoindCompatible) => {
                Ok(CompatibleCoinduction::new(phi)?.apply(x)?.comodule().clone())
            }
            (FunctorContext::Pairing(pm), FunctorKind::CoindMeasuring) => Ok(coind_measuring(pm, x)?.comodule().clone()),
            _ => Err(Error::hypothesis(format!("{} does not act on comodules", self.kind))),
        }
    }

    /// Applies `Coind_L^K` to a right `S`-module.
    pub fn apply_module(&self, n: &Bimodule) -> Result<Bimodule> {
        self.ready()?;
        match &self.context {
            FunctorContext::General { sigma, k, l } => Ok(sigma.coind_general(k, l, n)?.module),
            _ => Err(Error::hypothesis(format!("{} does not act on modules", self.kind))),
        }
    }
}
