//! Model validation and the seeded verification suites.
//!
//! Every suite has a file part, run on the structures declared in the model,
//! and a random part of `trials` independent instances. Trial `i` draws from
//! its own stream, so the report is the same however the trials are
//! scheduled.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::comodule::{Comodule, LeftComodule};
use crate::coring::Coring;
use crate::dual::{DualRing, DualSide};
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::functors::{cotensor_as_center, verify_natural_iso, BilinearPairing, CompatibleCoinduction, SigmaContext};
use crate::linalg::{Matrix, Subspace};
use crate::morphism::CoringMorphism;
use crate::pairing::{MeasuringPairing, PairingMorphism};
use crate::report::Verdict;
use crate::sharp::SharpSpaces;
use crate::trace::trace_sp;

use super::model::{Kind, ModelFile, Object};
use super::random::{random_grouplike_morphism, random_module, trial_rng, ComoduleSampler, LeftComoduleSampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Axioms,
    AdjunctionSg,
    AdjunctionMain,
    NaturalIso,
    CotensorCenter,
    RatSpAgreement,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::AdjunctionSg,
        Suite::AdjunctionMain,
        Suite::NaturalIso,
        Suite::CotensorCenter,
        Suite::RatSpAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::AdjunctionSg => "adjunction-sg",
            Suite::AdjunctionMain => "adjunction-main",
            Suite::NaturalIso => "natural-iso",
            Suite::CotensorCenter => "cotensor-center",
            Suite::RatSpAgreement => "rat-sp-agreement",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 25,
            seed: 0,
            max_dim: 3,
        }
    }
}

// ------------------------------------------------------------- validation

/// One verdict per declared object, plus the three dual rings of every
/// coring and the compatibility of every coring morphism (as a NOTE).
pub fn validate_model(model: &ModelFile) -> Vec<Verdict> {
    let mut out = Vec::new();
    for e in model.entries() {
        let name = &e.name;
        match &e.object {
            Object::Algebra(a) => out.push(Verdict::from_validation(format!("algebra {name}"), &a.validate())),
            Object::Morphism(m) => out.push(Verdict::from_validation(format!("morphism {name}"), &m.validate())),
            Object::Bimodule(b) => out.push(Verdict::from_validation(format!("bimodule {name}"), &b.validate())),
            Object::Coring(c) => {
                let v = c.validate();
                let ok = v.is_ok();
                out.push(Verdict::from_validation(format!("coring {name}"), &v));
                if ok {
                    for side in [DualSide::Left, DualSide::Right, DualSide::Bi] {
                        let check = format!("dual-ring {name} {}", side_name(side));
                        out.push(match DualRing::new(c.clone(), side) {
                            Ok(d) => {
                                let mut verdict = Verdict::from_validation(check, &d.algebra.validate());
                                verdict.details = format!("dim {}; {}", d.dim(), verdict.details);
                                verdict
                            }
                            Err(e) => Verdict::fail(check, e.to_string()),
                        });
                    }
                }
            }
            Object::CoringMorphism(phi) => {
                let v = phi.validate();
                let ok = v.is_ok();
                out.push(Verdict::from_validation(format!("coring-morphism {name}"), &v));
                if ok {
                    out.push(compatibility_note(name, phi));
                }
            }
            Object::Comodule(m) => out.push(Verdict::from_validation(format!("comodule {name}"), &m.validate())),
            Object::LeftComodule(m) => {
                out.push(Verdict::from_validation(format!("left-comodule {name}"), &m.validate()))
            }
            Object::Pairing(p) => {
                let check = format!("pairing {name}");
                out.push(if p.alpha.holds() {
                    Verdict::pass(check, format!("alpha-condition holds; dense={}", p.is_dense()))
                } else {
                    Verdict::note(check, format!("alpha-condition fails: {}", p.alpha.reason()))
                });
            }
            Object::PairingMorphism(pm) => {
                out.push(Verdict::from_validation(format!("pairing-morphism {name}"), &pm.validate()))
            }
            Object::ComoduleMap(map) => {
                let check = format!("comodule-map {name}");
                out.push(match colinear(model, &e.refs[0], &e.refs[1], map) {
                    Ok(true) => Verdict::pass(check, "colinear"),
                    Ok(false) => Verdict::fail(check, "not colinear"),
                    Err(e) => Verdict::fail(check, e.to_string()),
                });
            }
        }
    }
    out
}

fn side_name(side: DualSide) -> &'static str {
    match side {
        DualSide::Left => "left",
        DualSide::Right => "right",
        DualSide::Bi => "bi",
    }
}

fn compatibility_note(name: &str, phi: &CoringMorphism) -> Verdict {
    let check = format!("compatibility {name}");
    match SharpSpaces::new(phi) {
        Ok(s) if s.compatible => Verdict::note(check, "compatible"),
        Ok(s) => Verdict::note(check, s.incompatibility()),
        Err(e) => Verdict::note(check, e.to_string()),
    }
}

fn colinear(model: &ModelFile, from: &str, to: &str, map: &Matrix) -> Result<bool> {
    match (&model.get(from)?.object, &model.get(to)?.object) {
        (Object::Comodule(a), Object::Comodule(b)) => Ok(a.coring() == b.coring() && a.is_colinear(b, map)),
        (Object::LeftComodule(a), Object::LeftComodule(b)) => Ok(a.coring() == b.coring() && a.is_colinear(b, map)),
        _ => Err(Error::hypothesis("a comodule map joins two comodules on the same side")),
    }
}

// ---------------------------------------------------------------- helpers

/// Runs `trial` for `0..n` in parallel; lines come back in trial order.
fn run_trials<F>(cfg: &SuiteConfig, stream: &str, trial: F) -> Vec<Verdict>
where
    F: Fn(usize, &mut ChaCha8Rng) -> Result<Vec<Verdict>> + Sync,
{
    let per: Vec<Vec<Verdict>> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(cfg.seed, stream, i);
            trial(i, &mut rng).unwrap_or_else(|e| vec![Verdict::fail(format!("{stream}[{i}]"), e.to_string())])
        })
        .collect();
    per.into_iter().flatten().collect()
}

fn comodules_over<'a>(model: &'a ModelFile, c: &Arc<Coring>) -> Vec<(&'a str, &'a Comodule)> {
    model
        .entries()
        .filter_map(|e| match &e.object {
            Object::Comodule(m) if m.coring() == c => Some((e.name.as_str(), m)),
            _ => None,
        })
        .collect()
}

fn left_comodules_over<'a>(model: &'a ModelFile, c: &Arc<Coring>) -> Vec<(&'a str, &'a LeftComodule)> {
    model
        .entries()
        .filter_map(|e| match &e.object {
            Object::LeftComodule(m) if m.coring() == c => Some((e.name.as_str(), m)),
            _ => None,
        })
        .collect()
}

/// Comodule maps of the file between the listed right comodules, as index
/// triples into `names`.
fn maps_between(model: &ModelFile, names: &[&str]) -> Vec<(String, usize, usize, Matrix)> {
    model
        .names(Kind::ComoduleMap)
        .into_iter()
        .filter_map(|n| {
            let (a, b, m) = model.comodule_map(n).ok()?;
            let i = names.iter().position(|x| *x == a)?;
            let j = names.iter().position(|x| *x == b)?;
            Some((n.to_string(), i, j, m.clone()))
        })
        .collect()
}

fn coring_morphisms(model: &ModelFile) -> Vec<(String, CoringMorphism)> {
    model
        .names(Kind::CoringMorphism)
        .into_iter()
        .filter_map(|n| Some((n.to_string(), model.coring_morphism(n).ok()?.clone())))
        .collect()
}

fn corings(model: &ModelFile) -> Vec<(String, Arc<Coring>)> {
    model
        .names(Kind::Coring)
        .into_iter()
        .filter_map(|n| Some((n.to_string(), model.coring(n).ok()?)))
        .collect()
}

/// File contexts if there are any, otherwise a fresh grouplike instance per
/// trial.
enum Pool<T> {
    File(Vec<(String, T)>),
    Random,
}

impl<T: Clone> Pool<T> {
    fn of(items: Vec<(String, T)>) -> Self {
        if items.is_empty() {
            Pool::Random
        } else {
            Pool::File(items)
        }
    }

    fn pick(&self, trial: usize, fresh: impl FnOnce() -> Result<T>) -> Result<(String, T)> {
        match self {
            Pool::File(items) => Ok(items[trial % items.len()].clone()),
            Pool::Random => Ok(("random".to_string(), fresh()?)),
        }
    }

    fn note(&self, suite: Suite, what: &str) -> Option<Verdict> {
        match self {
            Pool::File(_) => None,
            Pool::Random => Some(Verdict::note(
                format!("{suite} random"),
                format!("no usable context in the file; trials use random grouplike {what}"),
            )),
        }
    }
}

fn grouplike_morphism(rng: &mut impl Rng, f: Fp, max_dim: usize) -> CoringMorphism {
    random_grouplike_morphism(rng, f, max_dim.clamp(1, 3))
}

fn dims(ms: &[usize]) -> String {
    let parts: Vec<String> = ms.iter().map(|d| d.to_string()).collect();
    parts.join(",")
}

// ------------------------------------------------------------------ suites

pub fn run_suite(model: &ModelFile, suite: Suite, cfg: &SuiteConfig) -> Vec<Verdict> {
    match suite {
        Suite::Axioms => axioms(model, cfg),
        Suite::AdjunctionSg => adjunction_sg(model, cfg),
        Suite::AdjunctionMain => adjunction_main(model, cfg),
        Suite::NaturalIso => natural_iso(model, cfg),
        Suite::CotensorCenter => cotensor_center(model, cfg),
        Suite::RatSpAgreement => rat_sp(model, cfg),
    }
}

fn axioms(model: &ModelFile, cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut out = validate_model(model);
    let f = model.field;
    let mut cs: Vec<(String, Arc<Coring>)> =
        corings(model).into_iter().filter(|(_, c)| c.validate().is_ok()).collect();
    if cs.is_empty() {
        cs.push(("G2".into(), Arc::new(Coring::grouplike(f, 2))));
    }
    out.extend(run_trials(cfg, "axioms", |i, rng| {
        let (name, c) = &cs[i % cs.len()];
        let m = ComoduleSampler::new(c.clone())?.sample(rng, cfg.max_dim)?;
        let l = LeftComoduleSampler::new(c.clone())?.sample(rng, cfg.max_dim)?;
        let phi = grouplike_morphism(rng, f, cfg.max_dim);
        let mut v = Vec::new();
        let mut vm = m.validate();
        vm.merge(m.direct_sum(&m)?.validate());
        v.push(Verdict::from_validation(format!("axioms[{i}] comodule over {name} dim {}", m.dim()), &vm));
        v.push(Verdict::from_validation(
            format!("axioms[{i}] left-comodule over {name} dim {}", l.dim()),
            &l.validate(),
        ));
        v.push(Verdict::from_validation(
            format!("axioms[{i}] coring-morphism G{}->G{}", phi.source.dim(), phi.target.dim()),
            &phi.validate(),
        ));
        Ok(v)
    }));
    out
}

fn adjunction_main(model: &ModelFile, cfg: &SuiteConfig) -> Vec<Verdict> {
    let suite = Suite::AdjunctionMain;
    let mut out = Vec::new();
    let mut usable = Vec::new();
    for (name, phi) in coring_morphisms(model) {
        let co = match CompatibleCoinduction::new(&phi) {
            Ok(co) => co,
            Err(e) => {
                out.push(Verdict::fail(format!("{suite} {name}"), e.to_string()));
                continue;
            }
        };
        let ms = comodules_over(model, &phi.source);
        let ns = comodules_over(model, &phi.target);
        for (mn, m) in &ms {
            for (nn, n) in &ns {
                let check = format!("{suite} {name} ({mn},{nn})");
                out.push(match co.witness(m, n) {
                    Ok(w) => Verdict::from_bool(
                        check,
                        w.holds(),
                        format!("dim Hom = {} = {}; Phi Psi = id: {}", w.left_dim, w.right_dim, w.mutually_inverse),
                    ),
                    Err(e) => Verdict::fail(check, e.to_string()),
                });
            }
        }
        // naturality along the file's maps, in one variable at a time
        let mnames: Vec<&str> = ms.iter().map(|x| x.0).collect();
        let nnames: Vec<&str> = ns.iter().map(|x| x.0).collect();
        let f = model.field;
        for (map, i, j, u) in maps_between(model, &mnames) {
            for (nn, n) in &ns {
                let check = format!("{suite} {name} naturality {map} x {nn}");
                let r = (|| {
                    let (src, dst) = (co.pair(ms[j].1, n)?, co.pair(ms[i].1, n)?);
                    co.naturality(&src, &dst, &u, &Matrix::identity(f, n.dim()))
                })();
                out.push(naturality_verdict(check, r));
            }
        }
        for (map, i, j, v) in maps_between(model, &nnames) {
            for (mn, m) in &ms {
                let check = format!("{suite} {name} naturality {mn} x {map}");
                let r = (|| {
                    let (src, dst) = (co.pair(m, ns[i].1)?, co.pair(m, ns[j].1)?);
                    co.naturality(&src, &dst, &Matrix::identity(f, m.dim()), &v)
                })();
                out.push(naturality_verdict(check, r));
            }
        }
        usable.push((name, phi));
    }
    let pool = Pool::of(usable);
    out.extend(pool.note(suite, "morphisms"));
    let f = model.field;
    out.extend(run_trials(cfg, suite.name(), |i, rng| {
        let (name, phi) = pool.pick(i, || Ok(grouplike_morphism(rng, f, cfg.max_dim)))?;
        let co = CompatibleCoinduction::new(&phi)?;
        let sc = ComoduleSampler::new(phi.source.clone())?;
        let sd = ComoduleSampler::new(phi.target.clone())?;
        let m = sc.sample(rng, cfg.max_dim)?;
        let n = sd.sample(rng, cfg.max_dim)?;
        let (m2, u) = sc.sub(rng, &m)?;
        let (n2, v) = sd.quotient(rng, &n)?;
        let src = co.pair(&m, &n)?;
        let w = co.witness_for(&src)?;
        let dst = co.pair(&m2, &n2)?;
        let nat = co.naturality(&src, &dst, &u, &v)?;
        let tag = format!("{suite}[{i}] {name} dims M={} N={}", m.dim(), n.dim());
        Ok(vec![
            Verdict::from_bool(
                format!("{tag} bijection"),
                w.holds(),
                format!("dim Hom = {} = {}", w.left_dim, w.right_dim),
            ),
            Verdict::from_bool(
                format!("{tag} naturality"),
                nat,
                format!("u: {} -> {}, v: {} -> {}", m2.dim(), m.dim(), n.dim(), n2.dim()),
            ),
        ])
    }));
    out
}

fn naturality_verdict(check: String, r: Result<bool>) -> Verdict {
    match r {
        Ok(true) => Verdict::pass(check, "square commutes"),
        Ok(false) => Verdict::fail(check, "square does not commute"),
        Err(e) => Verdict::fail(check, e.to_string()),
    }
}

/// Pairing morphisms of the file with both alpha conditions, then canonical
/// pairing morphisms of same-base coring morphisms.
fn pairing_contexts(model: &ModelFile, out: &mut Vec<Verdict>) -> Vec<(String, PairingMorphism)> {
    let suite = Suite::AdjunctionSg;
    let mut ctx = Vec::new();
    for n in model.names(Kind::PairingMorphism) {
        let Ok(pm) = model.pairing_morphism(n) else { continue };
        if pm.source.alpha.holds() && pm.target.alpha.holds() {
            ctx.push((n.to_string(), pm.clone()));
        } else {
            out.push(Verdict::note(format!("{suite} {n}"), "skipped: alpha-condition fails"));
        }
    }
    for (n, phi) in coring_morphisms(model) {
        if !phi.is_same_base() {
            out.push(Verdict::note(format!("{suite} {n}"), "skipped: beta is not the identity"));
            continue;
        }
        match PairingMorphism::canonical(phi) {
            Ok(pm) => ctx.push((n, pm)),
            Err(e) => out.push(Verdict::fail(format!("{suite} {n}"), e.to_string())),
        }
    }
    ctx
}

fn adjunction_sg(model: &ModelFile, cfg: &SuiteConfig) -> Vec<Verdict> {
    let suite = Suite::AdjunctionSg;
    let mut out = Vec::new();
    let ctx = pairing_contexts(model, &mut out);
    let pool = Pool::of(ctx);
    out.extend(pool.note(suite, "morphisms"));
    let f = model.field;
    out.extend(run_trials(cfg, suite.name(), |i, rng| {
        let (name, pm) = pool.pick(i, || PairingMorphism::canonical(grouplike_morphism(rng, f, cfg.max_dim)))?;
        let sigma = SigmaContext::from_pairing_morphism(&pm)?;
        let k = pm.source.coring_module();
        let l = pm.target.coring_module();
        let mc = ComoduleSampler::new(pm.source.coring.clone())?.sample(rng, cfg.max_dim)?;
        let nc = ComoduleSampler::new(pm.target.coring.clone())?.sample(rng, cfg.max_dim)?;
        let m = pm.source.module_from_comodule(&mc)?;
        let n = pm.target.module_from_comodule(&nc)?;
        let adj = sigma.adjunction(&k, &l, &m, &n)?;
        let check = format!("{suite}[{i}] {name} dims M={} N={}", m.dim(), n.dim());
        Ok(vec![Verdict::from_bool(
            check,
            adj.holds(),
            format!(
                "dim Hom(M(x)B,N) = {}, dim Hom(M,Coind N) = {}; composite = can: {}",
                adj.lhs_dim,
                adj.rhs_dim,
                adj.can.composite() == adj.can.direct
            ),
        )])
    }));
    out
}

fn natural_iso(model: &ModelFile, cfg: &SuiteConfig) -> Vec<Verdict> {
    let suite = Suite::NaturalIso;
    let mut out = Vec::new();
    let mut usable = Vec::new();
    for (name, phi) in coring_morphisms(model) {
        if let Err(e) = CompatibleCoinduction::new(&phi) {
            out.push(Verdict::fail(format!("{suite} {name}"), e.to_string()));
            continue;
        }
        let mut ns = comodules_over(model, &phi.target);
        let regular;
        if ns.is_empty() {
            regular = Comodule::regular(phi.target.clone());
            ns.push(("regular", &regular));
        }
        let names: Vec<&str> = ns.iter().map(|x| x.0).collect();
        let maps = maps_between(model, &names);
        let objs: Vec<Comodule> = ns.iter().map(|x| x.1.clone()).collect();
        let triples: Vec<(usize, usize, Matrix)> = maps.iter().map(|(_, i, j, m)| (*i, *j, m.clone())).collect();
        match verify_natural_iso(&phi, &objs, &triples) {
            Ok(r) => {
                for (inst, n) in r.instances.iter().zip(&names) {
                    out.push(Verdict::from_bool(
                        format!("{suite} {name} tau {n}"),
                        inst.holds(),
                        format!(
                            "dim Coind = {}, dim cotensor = {}; colinear {} invertible {}",
                            inst.coind.dim(),
                            inst.cotensor.comodule.dim(),
                            inst.colinear,
                            inst.invertible
                        ),
                    ));
                }
                for (sq, (map, ..)) in r.squares.iter().zip(&maps) {
                    out.push(Verdict::from_bool(
                        format!("{suite} {name} naturality {map}"),
                        sq.commutes,
                        format!("{} -> {}", names[sq.from], names[sq.to]),
                    ));
                }
            }
            Err(e) => out.push(Verdict::fail(format!("{suite} {name}"), e.to_string())),
        }
        usable.push((name, phi));
    }
    let pool = Pool::of(usable);
    out.extend(pool.note(suite, "morphisms"));
    let f = model.field;
    out.extend(run_trials(cfg, suite.name(), |i, rng| {
        let (name, phi) = pool.pick(i, || Ok(grouplike_morphism(rng, f, cfg.max_dim)))?;
        let sd = ComoduleSampler::new(phi.target.clone())?;
        let n1 = sd.sample(rng, cfg.max_dim)?;
        let (n0, incl) = sd.sub(rng, &n1)?;
        let (n2, proj) = sd.quotient(rng, &n1)?;
        let r = verify_natural_iso(&phi, &[n0.clone(), n1.clone(), n2.clone()], &[(0, 1, incl), (1, 2, proj)])?;
        let taus = r.instances.iter().all(|t| t.holds());
        let squares = r.squares.iter().filter(|s| s.commutes).count();
        let coind: Vec<usize> = r.instances.iter().map(|t| t.coind.dim()).collect();
        Ok(vec![Verdict::from_bool(
            format!("{suite}[{i}] {name} dims N={}", dims(&[n0.dim(), n1.dim(), n2.dim()])),
            r.holds(),
            format!(
                "dim Coind = {}; tau colinear isos: {taus}; squares {squares}/{}",
                dims(&coind),
                r.squares.len()
            ),
        )])
    }));
    out
}

fn cotensor_center(model: &ModelFile, cfg: &SuiteConfig) -> Vec<Verdict> {
    let suite = Suite::CotensorCenter;
    let mut out = Vec::new();
    let mut usable = Vec::new();
    for (name, c) in corings(model) {
        let q = match BilinearPairing::canonical(c.clone()) {
            Ok(q) if q.alpha.holds() => q,
            Ok(q) => {
                out.push(Verdict::note(format!("{suite} {name}"), format!("skipped: {}", q.alpha.reason())));
                continue;
            }
            Err(e) => {
                out.push(Verdict::fail(format!("{suite} {name}"), e.to_string()));
                continue;
            }
        };
        for (mn, m) in comodules_over(model, &c) {
            for (nn, n) in left_comodules_over(model, &c) {
                out.push(center_verdict(format!("{suite} {name} ({mn},{nn})"), &q, m, n));
            }
        }
        usable.push((name, q));
    }
    let pool = Pool::of(usable);
    out.extend(pool.note(suite, "corings"));
    let f = model.field;
    out.extend(run_trials(cfg, suite.name(), |i, rng| {
        let (name, q) = pool.pick(i, || BilinearPairing::canonical(Arc::new(Coring::grouplike(f, rng.gen_range(1..=3)))))?;
        let m = ComoduleSampler::new(q.coring.clone())?.sample(rng, cfg.max_dim)?;
        let n = LeftComoduleSampler::new(q.coring.clone())?.sample(rng, cfg.max_dim)?;
        Ok(vec![center_verdict(format!("{suite}[{i}] {name} dims M={} N={}", m.dim(), n.dim()), &q, &m, &n)])
    }));
    out
}

fn center_verdict(check: String, q: &BilinearPairing, m: &Comodule, n: &LeftComodule) -> Verdict {
    match cotensor_as_center(q, m, n) {
        Ok(w) => Verdict::from_bool(
            check,
            w.holds(),
            format!(
                "dim cotensor = {}, dim centralizer = {}, dim Hom = {}; equal {} inverse {}",
                w.cotensor.dim(),
                w.centralizer.dim(),
                w.hom.dim(),
                w.equal,
                w.inverse
            ),
        ),
        Err(e) => Verdict::fail(check, e.to_string()),
    }
}

fn rat_sp(model: &ModelFile, cfg: &SuiteConfig) -> Vec<Verdict> {
    let suite = Suite::RatSpAgreement;
    let mut out = Vec::new();
    let mut usable: Vec<(String, Arc<MeasuringPairing>)> = Vec::new();
    for n in model.names(Kind::Pairing) {
        let Ok(p) = model.pairing(n) else { continue };
        if !p.alpha.holds() {
            out.push(Verdict::note(format!("{suite} {n}"), "skipped: alpha-condition fails"));
            continue;
        }
        for e in model.entries() {
            if let Object::Bimodule(b) = &e.object {
                if **b.right_algebra() == *p.t {
                    out.push(rat_verdict(format!("{suite} {n} {}", e.name), &p, b));
                }
            }
        }
        for (mn, m) in comodules_over(model, &p.coring) {
            let check = format!("{suite} {n} comodule {mn}");
            out.push(match p.module_from_comodule(m).and_then(|x| p.rat(&x)) {
                Ok(r) => Verdict::from_bool(check, r.space.is_full(), format!("rat dim {} of {}", r.space.dim(), m.dim())),
                Err(e) => Verdict::fail(check, e.to_string()),
            });
        }
        usable.push((n.to_string(), p));
    }
    for (n, c) in corings(model) {
        if let Ok(p) = MeasuringPairing::canonical(c) {
            if p.alpha.holds() {
                usable.push((format!("*{n}"), Arc::new(p)));
            }
        }
    }
    let pool = Pool::of(usable);
    out.extend(pool.note(suite, "corings"));
    let f = model.field;
    out.extend(run_trials(cfg, suite.name(), |i, rng| {
        let (name, p) = pool.pick(i, || {
            Ok(Arc::new(MeasuringPairing::canonical(Arc::new(Coring::grouplike(f, rng.gen_range(1..=3))))?))
        })?;
        let m = random_module(rng, &p.t, cfg.max_dim);
        let mut v = vec![rat_verdict(format!("{suite}[{i}] {name} dim M={}", m.dim()), &p, &m)];
        // every finite-dimensional module over the full dual is rational
        let canon = MeasuringPairing::canonical(p.coring.clone())?;
        let x = random_module(rng, &canon.t, cfg.max_dim);
        let r = canon.rat(&x)?;
        v.push(Verdict::from_bool(
            format!("{suite}[{i}] canonical dim M={}", x.dim()),
            r.space.is_full(),
            format!("rat dim {} of {}", r.space.dim(), x.dim()),
        ));
        Ok(v)
    }));
    out
}

fn rat_verdict(check: String, p: &MeasuringPairing, m: &crate::module::Bimodule) -> Verdict {
    let r = p.rat(m).and_then(|r| Ok((r.space, trace_sp(&p.coring_module(), &m.as_right())?)));
    match r {
        Ok((rat, sp)) => Verdict::from_bool(
            check,
            rat == sp,
            format!("rat dim {} of {}; Sp dim {}; basis {}", rat.dim(), m.dim(), sp.dim(), basis_text(&rat)),
        ),
        Err(e) => Verdict::fail(check, e.to_string()),
    }
}

/// `[r0; r1; ...]` with rows written as digit strings separated by spaces.
pub fn basis_text(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis()
        .row_iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}
