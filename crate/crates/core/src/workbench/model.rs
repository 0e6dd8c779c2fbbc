//! Line-oriented model files.
//!
//! ```text
//! field p=2
//! algebra F2 dim=1
//! mul 0 0 = 0:1
//! unit = 0:1
//! bimodule Gb left=F2 right=F2 dim=2
//! lact 0 0 = 0:1
//! ...
//! coring G on Gb
//! delta 0 = 0,0:1
//! eps 0 = 0:1
//! ```
//!
//! Headers open sections; body lines are `key <indices> = <terms>` where a
//! term is `k:c` or `j,k:c` and terms are joined by `+`. Unlisted entries
//! are 0. Scalars must already be reduced mod p. Besides declared names an
//! algebra slot accepts `ground` and the duals `*C`, `C*`, `*C*` of a
//! declared coring.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use indexmap::IndexMap;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::comodule::{Comodule, LeftComodule};
use crate::coring::Coring;
use crate::dual::{DualRing, DualSide};
use crate::error::{Error, Result};
use crate::field::{Fp, Scalar};
use crate::linalg::Matrix;
use crate::module::Bimodule;
use crate::morphism::CoringMorphism;
use crate::pairing::{MeasuringPairing, PairingMorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Algebra,
    Morphism,
    Bimodule,
    Coring,
    CoringMorphism,
    Comodule,
    LeftComodule,
    Pairing,
    PairingMorphism,
    ComoduleMap,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Morphism => "morphism",
            Kind::Bimodule => "bimodule",
            Kind::Coring => "coring",
            Kind::CoringMorphism => "coring_morphism",
            Kind::Comodule => "comodule",
            Kind::LeftComodule => "left_comodule",
            Kind::Pairing => "pairing",
            Kind::PairingMorphism => "pairing_morphism",
            Kind::ComoduleMap => "comodule_map",
        }
    }

    fn from_keyword(s: &str) -> Option<Kind> {
        Some(match s {
            "algebra" => Kind::Algebra,
            "morphism" => Kind::Morphism,
            "bimodule" => Kind::Bimodule,
            "coring" => Kind::Coring,
            "coring_morphism" => Kind::CoringMorphism,
            "comodule" => Kind::Comodule,
            "left_comodule" => Kind::LeftComodule,
            "pairing" => Kind::Pairing,
            "pairing_morphism" => Kind::PairingMorphism,
            "comodule_map" => Kind::ComoduleMap,
            _ => return None,
        })
    }

    /// Body keys with (index count, term arity).
    fn body_keys(self) -> &'static [(&'static str, usize, usize)] {
        match self {
            Kind::Algebra => &[("mul", 2, 1), ("unit", 0, 1)],
            Kind::Morphism | Kind::ComoduleMap => &[("map", 1, 1)],
            Kind::Bimodule => &[("lact", 2, 1), ("ract", 2, 1)],
            Kind::Coring => &[("delta", 1, 2), ("eps", 1, 1)],
            Kind::CoringMorphism => &[("theta", 1, 1)],
            Kind::Comodule => &[("ract", 2, 1), ("rho", 1, 2)],
            Kind::LeftComodule => &[("lact", 2, 1), ("lambda", 1, 2)],
            Kind::Pairing | Kind::PairingMorphism => &[],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug)]
pub enum Object {
    Algebra(Arc<Algebra>),
    Morphism(AlgebraMorphism),
    Bimodule(Bimodule),
    Coring(Arc<Coring>),
    CoringMorphism(CoringMorphism),
    Comodule(Comodule),
    LeftComodule(LeftComodule),
    Pairing(Arc<MeasuringPairing>),
    PairingMorphism(PairingMorphism),
    /// A map between two comodules (right or left), `dim M x dim N`.
    ComoduleMap(Matrix),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Algebra(_) => Kind::Algebra,
            Object::Morphism(_) => Kind::Morphism,
            Object::Bimodule(_) => Kind::Bimodule,
            Object::Coring(_) => Kind::Coring,
            Object::CoringMorphism(_) => Kind::CoringMorphism,
            Object::Comodule(_) => Kind::Comodule,
            Object::LeftComodule(_) => Kind::LeftComodule,
            Object::Pairing(_) => Kind::Pairing,
            Object::PairingMorphism(_) => Kind::PairingMorphism,
            Object::ComoduleMap(_) => Kind::ComoduleMap,
        }
    }
}

/// A declared object with the names its header refers to.
///
/// `refs` by kind: morphism `[src, dst]`; bimodule `[left, right]`; coring
/// `[carrier]`; coring morphism `[C, D]` or `[C, D, beta]`; (left) comodule
/// `[coring]`; pairing `[t, coring, kappa]`; pairing morphism
/// `[P, Q, xi, theta]`; comodule map `[M, N]`.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub refs: Vec<String>,
    pub object: Object,
    pub line: usize,
}

impl Entry {
    pub fn kind(&self) -> Kind {
        self.object.kind()
    }
}

#[derive(Clone, Debug)]
pub struct ModelFile {
    pub field: Fp,
    entries: IndexMap<String, Entry>,
}

const RESERVED: [&str; 2] = ["ground", "id"];

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        && !RESERVED.contains(&s)
}

impl ModelFile {
    pub fn new(field: Fp) -> Self {
        ModelFile {
            field,
            entries: IndexMap::new(),
        }
    }

    pub fn push(&mut self, name: &str, refs: &[&str], object: Object) -> Result<()> {
        if !valid_name(name) {
            return Err(Error::Hypothesis(format!("invalid name `{name}`")));
        }
        if self.entries.contains_key(name) {
            return Err(Error::Hypothesis(format!("duplicate name `{name}`")));
        }
        self.entries.insert(
            name.to_string(),
            Entry {
                name: name.to_string(),
                refs: refs.iter().map(|s| s.to_string()).collect(),
                object,
                line: 0,
            },
        );
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.entries.values()
    }

    pub fn get(&self, name: &str) -> Result<&Entry> {
        self.entries.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn names(&self, kind: Kind) -> Vec<&str> {
        self.entries().filter(|e| e.kind() == kind).map(|e| e.name.as_str()).collect()
    }

    fn wrong_kind(name: &str, want: Kind, got: Kind) -> Error {
        Error::Hypothesis(format!("`{name}` is a {got}, expected a {want}"))
    }

    /// Declared algebra, `ground`, or a dual `*C`, `C*`, `*C*`.
    pub fn algebra(&self, name: &str) -> Result<Arc<Algebra>> {
        if name == "ground" {
            return Ok(Arc::new(Algebra::ground(self.field)));
        }
        if let Some((c, side)) = dual_ref(name) {
            let coring = self.coring(c)?;
            return Ok(DualRing::new(coring, side)?.algebra);
        }
        match &self.get(name)?.object {
            Object::Algebra(a) => Ok(a.clone()),
            o => Err(Self::wrong_kind(name, Kind::Algebra, o.kind())),
        }
    }

    pub fn morphism(&self, name: &str) -> Result<&AlgebraMorphism> {
        match &self.get(name)?.object {
            Object::Morphism(m) => Ok(m),
            o => Err(Self::wrong_kind(name, Kind::Morphism, o.kind())),
        }
    }

    pub fn bimodule(&self, name: &str) -> Result<&Bimodule> {
        match &self.get(name)?.object {
            Object::Bimodule(m) => Ok(m),
            o => Err(Self::wrong_kind(name, Kind::Bimodule, o.kind())),
        }
    }

    pub fn coring(&self, name: &str) -> Result<Arc<Coring>> {
        match &self.get(name)?.object {
            Object::Coring(c) => Ok(c.clone()),
            o => Err(Self::wrong_kind(name, Kind::Coring, o.kind())),
        }
    }

    pub fn coring_morphism(&self, name: &str) -> Result<&CoringMorphism> {
        match &self.get(name)?.object {
            Object::CoringMorphism(m) => Ok(m),
            o => Err(Self::wrong_kind(name, Kind::CoringMorphism, o.kind())),
        }
    }

    pub fn comodule(&self, name: &str) -> Result<&Comodule> {
        match &self.get(name)?.object {
            Object::Comodule(m) => Ok(m),
            o => Err(Self::wrong_kind(name, Kind::Comodule, o.kind())),
        }
    }

    pub fn left_comodule(&self, name: &str) -> Result<&LeftComodule> {
        match &self.get(name)?.object {
            Object::LeftComodule(m) => Ok(m),
            o => Err(Self::wrong_kind(name, Kind::LeftComodule, o.kind())),
        }
    }

    pub fn pairing(&self, name: &str) -> Result<Arc<MeasuringPairing>> {
        match &self.get(name)?.object {
            Object::Pairing(p) => Ok(p.clone()),
            o => Err(Self::wrong_kind(name, Kind::Pairing, o.kind())),
        }
    }

    pub fn pairing_morphism(&self, name: &str) -> Result<&PairingMorphism> {
        match &self.get(name)?.object {
            Object::PairingMorphism(p) => Ok(p),
            o => Err(Self::wrong_kind(name, Kind::PairingMorphism, o.kind())),
        }
    }

    /// `(source, target, matrix)` of a comodule map.
    pub fn comodule_map(&self, name: &str) -> Result<(&str, &str, &Matrix)> {
        let e = self.get(name)?;
        match &e.object {
            Object::ComoduleMap(m) => Ok((&e.refs[0], &e.refs[1], m)),
            o => Err(Self::wrong_kind(name, Kind::ComoduleMap, o.kind())),
        }
    }

    /// Dimension of a comodule of either side.
    fn comodule_dim(&self, name: &str) -> Result<usize> {
        match &self.get(name)?.object {
            Object::Comodule(m) => Ok(m.dim()),
            Object::LeftComodule(m) => Ok(m.dim()),
            o => Err(Self::wrong_kind(name, Kind::Comodule, o.kind())),
        }
    }
}

fn dual_ref(name: &str) -> Option<(&str, DualSide)> {
    let l = name.strip_prefix('*');
    let r = name.strip_suffix('*');
    match (l, r) {
        (Some(l), Some(_)) => l.strip_suffix('*').filter(|c| !c.is_empty()).map(|c| (c, DualSide::Bi)),
        (Some(c), None) if !c.is_empty() => Some((c, DualSide::Left)),
        (None, Some(c)) if !c.is_empty() => Some((c, DualSide::Right)),
        _ => None,
    }
}

// ---------------------------------------------------------------- parsing

type Term = (Vec<usize>, Scalar);

struct BodyLine {
    line: usize,
    key: String,
    idx: Vec<usize>,
    terms: Vec<Term>,
}

struct Section {
    kind: Kind,
    name: String,
    line: usize,
    positional: Vec<String>,
    kv: IndexMap<String, String>,
    body: Vec<BodyLine>,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => perr(line, other.to_string()),
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| perr(line, format!("expected a non-negative integer for {what}, found `{tok}`")))
}

fn parse_scalar(tok: &str, line: usize, f: Fp) -> Result<Scalar> {
    let v: u64 = tok
        .parse()
        .map_err(|_| perr(line, format!("expected a scalar, found `{tok}`")))?;
    if v >= f.p() as u64 {
        return Err(perr(line, format!("scalar {v} is out of range for p={}", f.p())));
    }
    Ok(v as Scalar)
}

fn parse_terms(rhs: &str, arity: usize, line: usize, f: Fp) -> Result<Vec<Term>> {
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok(Vec::new());
    }
    if rhs.is_empty() {
        return Err(perr(line, "missing terms after `=`"));
    }
    let mut out: Vec<Term> = Vec::new();
    for term in rhs.split('+') {
        let term = term.trim();
        let (idx, c) = term
            .split_once(':')
            .ok_or_else(|| perr(line, format!("term `{term}` is not of the form index:scalar")))?;
        let idx: Vec<usize> = idx
            .split(',')
            .map(|t| parse_usize(t.trim(), line, "a term index"))
            .collect::<Result<_>>()?;
        if idx.len() != arity {
            return Err(perr(line, format!("term `{term}` needs {arity} index(es)")));
        }
        if out.iter().any(|(i, _)| *i == idx) {
            return Err(perr(line, format!("duplicate term index in `{term}`")));
        }
        out.push((idx, parse_scalar(c.trim(), line, f)?));
    }
    Ok(out)
}

fn parse_header(kind: Kind, toks: &[&str], line: usize) -> Result<Section> {
    let name = toks
        .get(1)
        .ok_or_else(|| perr(line, format!("{kind} needs a name")))?;
    if !valid_name(name) {
        return Err(perr(line, format!("invalid name `{name}`")));
    }
    let mut positional = Vec::new();
    let mut kv = IndexMap::new();
    for t in &toks[2..] {
        match t.split_once('=') {
            Some((k, v)) if !k.is_empty() && !v.is_empty() => {
                if kv.insert(k.to_string(), v.to_string()).is_some() {
                    return Err(perr(line, format!("duplicate key `{k}`")));
                }
            }
            Some(_) => return Err(perr(line, format!("malformed key=value `{t}`"))),
            None => positional.push(t.to_string()),
        }
    }
    let allowed: &[&str] = match kind {
        Kind::Algebra | Kind::Comodule | Kind::LeftComodule => &["dim"],
        Kind::Bimodule => &["left", "right", "dim"],
        Kind::CoringMorphism => &["beta"],
        Kind::Pairing => &["t", "coring", "kappa"],
        Kind::PairingMorphism => &["xi", "theta"],
        _ => &[],
    };
    if let Some(k) = kv.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(perr(line, format!("unexpected key `{k}` for {kind}")));
    }
    let shape_ok = match kind {
        Kind::Morphism | Kind::CoringMorphism | Kind::PairingMorphism | Kind::ComoduleMap => {
            positional.len() == 4 && positional[0] == ":" && positional[2] == "->"
        }
        Kind::Coring => positional.len() == 2 && positional[0] == "on",
        Kind::Comodule | Kind::LeftComodule => positional.len() == 2 && positional[0] == "over",
        _ => positional.is_empty(),
    };
    if !shape_ok {
        let expected = match kind {
            Kind::Morphism | Kind::CoringMorphism | Kind::PairingMorphism | Kind::ComoduleMap => {
                format!("{kind} <name> : <source> -> <target>")
            }
            Kind::Coring => "coring <name> on <bimodule>".into(),
            Kind::Comodule | Kind::LeftComodule => format!("{kind} <name> over <coring> dim=<n>"),
            _ => format!("{kind} <name> key=value ..."),
        };
        return Err(perr(line, format!("malformed header, expected `{expected}`")));
    }
    let required: &[&str] = match kind {
        Kind::Algebra | Kind::Comodule | Kind::LeftComodule | Kind::Bimodule => &["dim"],
        Kind::Pairing => &["t", "coring", "kappa"],
        Kind::PairingMorphism => &["xi", "theta"],
        _ => &[],
    };
    if let Some(k) = required.iter().find(|k| !kv.contains_key(**k)) {
        return Err(perr(line, format!("{kind} needs `{k}=`")));
    }
    Ok(Section {
        kind,
        name: name.to_string(),
        line,
        positional,
        kv,
        body: Vec::new(),
    })
}

fn parse_body(kind: Kind, toks_line: &str, line: usize, f: Fp) -> Result<BodyLine> {
    let (lhs, rhs) = toks_line
        .split_once('=')
        .ok_or_else(|| perr(line, "expected `key indices = terms`"))?;
    let lhs: Vec<&str> = lhs.split_whitespace().collect();
    let key = lhs[0];
    let &(_, nidx, arity) = kind
        .body_keys()
        .iter()
        .find(|(k, _, _)| *k == key)
        .ok_or_else(|| perr(line, format!("`{key}` is not allowed in a {kind} section")))?;
    if lhs.len() - 1 != nidx {
        return Err(perr(line, format!("`{key}` takes {nidx} index(es)")));
    }
    let idx = lhs[1..]
        .iter()
        .map(|t| parse_usize(t, line, "an index"))
        .collect::<Result<Vec<_>>>()?;
    Ok(BodyLine {
        line,
        key: key.to_string(),
        idx,
        terms: parse_terms(rhs, arity, line, f)?,
    })
}

pub fn parse_model(text: &str) -> Result<ModelFile> {
    let mut model: Option<ModelFile> = None;
    let mut current: Option<Section> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(m) = model.as_mut() else {
            if toks[0] != "field" {
                return Err(perr(line, "missing field declaration"));
            }
            let p = match toks.as_slice() {
                [_, p] => p.strip_prefix("p=").ok_or_else(|| perr(line, "expected `field p=<prime>`"))?,
                _ => return Err(perr(line, "expected `field p=<prime>`")),
            };
            let p: u32 = p.parse().map_err(|_| perr(line, format!("invalid modulus `{p}`")))?;
            model = Some(ModelFile::new(Fp::new(p).map_err(|e| at(line, e))?));
            continue;
        };
        if toks[0] == "field" {
            return Err(perr(line, "duplicate field declaration"));
        }
        if let Some(kind) = Kind::from_keyword(toks[0]) {
            if let Some(s) = current.take() {
                build(m, s)?;
            }
            current = Some(parse_header(kind, &toks, line)?);
        } else {
            let s = current
                .as_mut()
                .ok_or_else(|| perr(line, format!("`{}` outside of a section", toks[0])))?;
            s.body.push(parse_body(s.kind, content, line, m.field)?);
        }
    }
    let mut m = model.ok_or_else(|| perr(1, "missing field declaration"))?;
    if let Some(s) = current.take() {
        build(&mut m, s)?;
    }
    Ok(m)
}

fn dim_of(s: &Section) -> Result<usize> {
    parse_usize(&s.kv["dim"], s.line, "dim")
}

fn check_range(b: &BodyLine, idx: usize, bound: usize, what: &str) -> Result<()> {
    if idx >= bound {
        return Err(perr(b.line, format!("{what} index {idx} is out of range (< {bound})")));
    }
    Ok(())
}

/// Fills `rows x cols` matrices selected by a leading index from body lines
/// `key a i = k:c` (or `key i = ...` when `blocks == 1`).
struct Fill<'a> {
    f: Fp,
    sec: &'a Section,
}

impl Fill<'_> {
    fn lines(&self, key: &str) -> impl Iterator<Item = &BodyLine> {
        let key = key.to_string();
        self.sec.body.iter().filter(move |b| b.key == key)
    }

    fn blocks(&self, key: &str, blocks: usize, rows: usize, cols: usize) -> Result<Vec<Matrix>> {
        let mut out = vec![Matrix::zeros(self.f, rows, cols); blocks];
        let mut seen = std::collections::HashSet::new();
        for b in self.lines(key) {
            let (blk, row) = if b.idx.len() == 2 { (b.idx[0], b.idx[1]) } else { (0, b.idx[0]) };
            check_range(b, blk, blocks, "basis")?;
            check_range(b, row, rows, "row")?;
            if !seen.insert((blk, row)) {
                return Err(perr(b.line, format!("duplicate `{key}` line")));
            }
            for (t, c) in &b.terms {
                check_range(b, t[0], cols, "term")?;
                out[blk].set(row, t[0], *c);
            }
        }
        Ok(out)
    }

    fn matrix(&self, key: &str, rows: usize, cols: usize) -> Result<Matrix> {
        Ok(self.blocks(key, 1, rows, cols)?.remove(0))
    }

    /// Rows with two-index terms `j,k:c` at column `j * inner + k`.
    fn pairs(&self, key: &str, rows: usize, outer: usize, inner: usize) -> Result<Matrix> {
        let mut out = Matrix::zeros(self.f, rows, outer * inner);
        let mut seen = std::collections::HashSet::new();
        for b in self.lines(key) {
            let row = b.idx[0];
            check_range(b, row, rows, "row")?;
            if !seen.insert(row) {
                return Err(perr(b.line, format!("duplicate `{key}` line")));
            }
            for (t, c) in &b.terms {
                check_range(b, t[0], outer, "term")?;
                check_range(b, t[1], inner, "term")?;
                out.set(row, t[0] * inner + t[1], *c);
            }
        }
        Ok(out)
    }
}

fn build(m: &mut ModelFile, s: Section) -> Result<()> {
    if m.entries.contains_key(&s.name) {
        return Err(perr(s.line, format!("duplicate name `{}`", s.name)));
    }
    let line = s.line;
    let (object, refs) = build_object(m, &s).map_err(|e| at(line, e))?;
    m.entries.insert(
        s.name.clone(),
        Entry {
            name: s.name,
            refs,
            object,
            line,
        },
    );
    Ok(())
}

fn build_object(m: &ModelFile, s: &Section) -> Result<(Object, Vec<String>)> {
    let f = m.field;
    let fill = Fill { f, sec: s };
    let pos = |i: usize| s.positional[i].clone();
    Ok(match s.kind {
        Kind::Algebra => {
            let n = dim_of(s)?;
            let mut mul = vec![0; n * n * n];
            let mut seen = std::collections::HashSet::new();
            for b in fill.lines("mul") {
                let (i, j) = (b.idx[0], b.idx[1]);
                check_range(b, i, n, "basis")?;
                check_range(b, j, n, "basis")?;
                if !seen.insert((i, j)) {
                    return Err(perr(b.line, "duplicate `mul` line"));
                }
                for (t, c) in &b.terms {
                    check_range(b, t[0], n, "term")?;
                    mul[(i * n + j) * n + t[0]] = *c;
                }
            }
            let units: Vec<&BodyLine> = fill.lines("unit").collect();
            if units.len() > 1 {
                return Err(perr(units[1].line, "duplicate `unit` line"));
            }
            let mut unit = vec![0; n];
            for b in units {
                for (t, c) in &b.terms {
                    check_range(b, t[0], n, "term")?;
                    unit[t[0]] = *c;
                }
            }
            (Object::Algebra(Arc::new(Algebra::new(f, n, mul, unit)?)), vec![])
        }
        Kind::Morphism => {
            let (a, b) = (m.algebra(&pos(1))?, m.algebra(&pos(3))?);
            let map = fill.matrix("map", a.dim(), b.dim())?;
            (Object::Morphism(AlgebraMorphism::new(a, b, map)?), vec![pos(1), pos(3)])
        }
        Kind::Bimodule => {
            let n = dim_of(s)?;
            let ln = s.kv.get("left").cloned().unwrap_or_else(|| "ground".into());
            let rn = s.kv.get("right").cloned().unwrap_or_else(|| "ground".into());
            let (l, r) = (m.algebra(&ln)?, m.algebra(&rn)?);
            let la = fill.blocks("lact", l.dim(), n, n)?;
            let ra = fill.blocks("ract", r.dim(), n, n)?;
            (Object::Bimodule(Bimodule::new(n, l, r, la, ra)?), vec![ln, rn])
        }
        Kind::Coring => {
            let carrier = m.bimodule(&pos(1))?.clone();
            let n = carrier.dim();
            let a = carrier.left_algebra().dim();
            let delta = fill.pairs("delta", n, n, n)?;
            let eps = fill.matrix("eps", n, a)?;
            (Object::Coring(Arc::new(Coring::from_raw(carrier, &delta, eps)?)), vec![pos(1)])
        }
        Kind::CoringMorphism => {
            let (c, d) = (m.coring(&pos(1))?, m.coring(&pos(3))?);
            let (beta, refs) = match s.kv.get("beta") {
                Some(b) => (m.morphism(b)?.clone(), vec![pos(1), pos(3), b.clone()]),
                None => {
                    if c.base() != d.base() {
                        return Err(Error::Hypothesis("bases differ, so `beta=` is required".into()));
                    }
                    (AlgebraMorphism::identity(c.base().clone()), vec![pos(1), pos(3)])
                }
            };
            let theta = fill.matrix("theta", c.dim(), d.dim())?;
            (Object::CoringMorphism(CoringMorphism::new(c, d, beta, theta)?), refs)
        }
        Kind::Comodule => {
            let c = m.coring(&pos(1))?;
            let n = dim_of(s)?;
            let a = c.base();
            let acts = fill.blocks("ract", a.dim(), n, n)?;
            let carrier = Bimodule::right_module(n, a.clone(), acts)?;
            let raw = fill.pairs("rho", n, n, c.dim())?;
            (Object::Comodule(Comodule::from_raw(c, carrier, &raw)?), vec![pos(1)])
        }
        Kind::LeftComodule => {
            let c = m.coring(&pos(1))?;
            let n = dim_of(s)?;
            let a = c.base();
            let acts = fill.blocks("lact", a.dim(), n, n)?;
            let carrier = Bimodule::left_module(n, a.clone(), acts)?;
            let raw = fill.pairs("lambda", n, c.dim(), n)?;
            (Object::LeftComodule(LeftComodule::from_raw(c, carrier, &raw)?), vec![pos(1)])
        }
        Kind::Pairing => {
            let (tn, cn, kn) = (&s.kv["t"], &s.kv["coring"], &s.kv["kappa"]);
            let t = m.algebra(tn)?;
            let c = m.coring(cn)?;
            let kappa = if kn == "id" {
                let dual = DualRing::new(c.clone(), DualSide::Left)?;
                if *dual.algebra != *t {
                    return Err(Error::Hypothesis(format!("kappa=id needs t=*{cn}")));
                }
                Matrix::identity(f, t.dim())
            } else {
                let k = m.morphism(kn)?;
                if k.source != t {
                    return Err(Error::Hypothesis(format!("kappa `{kn}` does not start at `{tn}`")));
                }
                k.map.clone()
            };
            let p = MeasuringPairing::new(t, c, kappa)?;
            (Object::Pairing(Arc::new(p)), vec![tn.clone(), cn.clone(), kn.clone()])
        }
        Kind::PairingMorphism => {
            let (p, q) = (m.pairing(&pos(1))?, m.pairing(&pos(3))?);
            let (xn, tn) = (&s.kv["xi"], &s.kv["theta"]);
            let xi = m.morphism(xn)?.clone();
            let phi = m.coring_morphism(tn)?.clone();
            let pm = PairingMorphism::new(p, q, xi, phi)?;
            (Object::PairingMorphism(pm), vec![pos(1), pos(3), xn.clone(), tn.clone()])
        }
        Kind::ComoduleMap => {
            let (a, b) = (m.comodule_dim(&pos(1))?, m.comodule_dim(&pos(3))?);
            let map = fill.matrix("map", a, b)?;
            (Object::ComoduleMap(map), vec![pos(1), pos(3)])
        }
    })
}

// --------------------------------------------------------------- printing

fn terms1(row: &[Scalar]) -> String {
    let parts: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, c)| format!("{k}:{c}"))
        .collect();
    parts.join(" + ")
}

fn terms2(row: &[Scalar], inner: usize) -> String {
    let parts: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, c)| format!("{},{}:{c}", k / inner, k % inner))
        .collect();
    parts.join(" + ")
}

fn rows(out: &mut String, prefix: &str, m: &Matrix) {
    for (i, r) in m.row_iter().enumerate() {
        if r.iter().any(|&c| c != 0) {
            let _ = writeln!(out, "{prefix}{i} = {}", terms1(r));
        }
    }
}

fn blocks(out: &mut String, key: &str, acts: &[Matrix]) {
    for (a, m) in acts.iter().enumerate() {
        rows(out, &format!("{key} {a} "), m);
    }
}

fn pair_rows(out: &mut String, key: &str, m: &Matrix, inner: usize) {
    for (i, r) in m.row_iter().enumerate() {
        if r.iter().any(|&c| c != 0) {
            let _ = writeln!(out, "{key} {i} = {}", terms2(r, inner));
        }
    }
}

pub fn print_model(model: &ModelFile) -> String {
    let mut out = format!("field p={}\n", model.field.p());
    for e in model.entries() {
        out.push('\n');
        let name = &e.name;
        let r = &e.refs;
        match &e.object {
            Object::Algebra(a) => {
                let n = a.dim();
                let _ = writeln!(out, "algebra {name} dim={n}");
                for i in 0..n {
                    for j in 0..n {
                        let p = a.basis_product(i, j);
                        if p.iter().any(|&c| c != 0) {
                            let _ = writeln!(out, "mul {i} {j} = {}", terms1(p));
                        }
                    }
                }
                if a.unit().iter().any(|&c| c != 0) {
                    let _ = writeln!(out, "unit = {}", terms1(a.unit()));
                }
            }
            Object::Morphism(mo) => {
                let _ = writeln!(out, "morphism {name} : {} -> {}", r[0], r[1]);
                rows(&mut out, "map ", &mo.map);
            }
            Object::Bimodule(b) => {
                let _ = writeln!(out, "bimodule {name} left={} right={} dim={}", r[0], r[1], b.dim());
                blocks(&mut out, "lact", b.left_actions());
                blocks(&mut out, "ract", b.right_actions());
            }
            Object::Coring(c) => {
                let _ = writeln!(out, "coring {name} on {}", r[0]);
                pair_rows(&mut out, "delta", &c.delta_raw(), c.dim());
                rows(&mut out, "eps ", c.eps());
            }
            Object::CoringMorphism(phi) => {
                let _ = write!(out, "coring_morphism {name} : {} -> {}", r[0], r[1]);
                if let Some(b) = r.get(2) {
                    let _ = write!(out, " beta={b}");
                }
                out.push('\n');
                rows(&mut out, "theta ", &phi.theta);
            }
            Object::Comodule(c) => {
                let _ = writeln!(out, "comodule {name} over {} dim={}", r[0], c.dim());
                blocks(&mut out, "ract", c.carrier().right_actions());
                pair_rows(&mut out, "rho", &c.rho_raw(), c.coring().dim());
            }
            Object::LeftComodule(c) => {
                let _ = writeln!(out, "left_comodule {name} over {} dim={}", r[0], c.dim());
                blocks(&mut out, "lact", c.carrier().left_actions());
                pair_rows(&mut out, "lambda", &c.lambda_raw(), c.dim());
            }
            Object::Pairing(_) => {
                let _ = writeln!(out, "pairing {name} t={} coring={} kappa={}", r[0], r[1], r[2]);
            }
            Object::PairingMorphism(_) => {
                let _ = writeln!(out, "pairing_morphism {name} : {} -> {} xi={} theta={}", r[0], r[1], r[2], r[3]);
            }
            Object::ComoduleMap(mat) => {
                let _ = writeln!(out, "comodule_map {name} : {} -> {}", r[0], r[1]);
                rows(&mut out, "map ", mat);
            }
        }
    }
    out
}

impl fmt::Display for ModelFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_model(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GROUPLIKE: &str = "\
field p=2
algebra F2 dim=1
mul 0 0 = 0:1
unit = 0:1
bimodule Gb left=F2 right=F2 dim=2
lact 0 0 = 0:1
lact 0 1 = 1:1
ract 0 0 = 0:1
ract 0 1 = 1:1
coring G on Gb
delta 0 = 0,0:1
delta 1 = 1,1:1
eps 0 = 0:1
eps 1 = 0:1
comodule M over G dim=2
ract 0 0 = 0:1
ract 0 1 = 1:1
rho 0 = 0,0:1
rho 1 = 1,1:1
";

    #[test]
    fn empty_file() {
        let e = parse_model("# nothing\n").unwrap_err();
        assert_eq!(e.to_string(), "line 1: missing field declaration");
    }

    #[test]
    fn out_of_range_scalar() {
        let e = parse_model("field p=3\nalgebra A dim=1\nmul 0 0 = 0:5\n").unwrap_err();
        assert_eq!(e, perr(3, "scalar 5 is out of range for p=3"));
    }

    #[test]
    fn round_trip() {
        let m = parse_model(GROUPLIKE).unwrap();
        assert!(m.coring("G").unwrap().validate().is_ok());
        let printed = print_model(&m);
        let again = print_model(&parse_model(&printed).unwrap());
        assert_eq!(printed, again);
        assert_eq!(m.comodule("M").unwrap().rho(), parse_model(&printed).unwrap().comodule("M").unwrap().rho());
    }

    #[test]
    fn positioned_reference_errors() {
        let e = parse_model("field p=2\n\ncoring C on Nope\n").unwrap_err();
        assert_eq!(e, perr(3, "unknown name `Nope`"));
        let e = parse_model("field p=2\nmul 0 0 = 0:1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_model(&GROUPLIKE.replace("rho 1 = 1,1:1", "rho 1 = 1,2:1")).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 19, .. }), "{e}");
    }

    #[test]
    fn dual_references() {
        let text = format!("{GROUPLIKE}pairing P t=*G coring=G kappa=id\n");
        let m = parse_model(&text).unwrap();
        assert_eq!(m.pairing("P").unwrap().t.dim(), 2);
        assert_eq!(m.algebra("*G*").unwrap().dim(), 2);
        assert!(m.algebra("**").is_err());
    }
}
