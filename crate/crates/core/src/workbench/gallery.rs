//! The canonical example files.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::comodule::{Comodule, LeftComodule};
use crate::coring::Coring;
use crate::error::Result;
use crate::field::Fp;
use crate::linalg::Matrix;
use crate::module::Bimodule;
use crate::morphism::CoringMorphism;
use crate::pairing::MeasuringPairing;

use super::model::{print_model, ModelFile, Object};

#[derive(Clone, Debug)]
pub struct GalleryFile {
    /// File stem; the file is written as `<name>.model`.
    pub name: &'static str,
    pub description: &'static str,
    pub model: ModelFile,
}

impl GalleryFile {
    pub fn file_name(&self) -> String {
        format!("{}.model", self.name)
    }

    pub fn text(&self) -> String {
        format!("# {}\n{}", self.description, print_model(&self.model))
    }
}

fn f2() -> Fp {
    Fp::new(2).expect("2 is prime")
}

/// Right-only copy of a comodule (the printed form keeps only `ract`).
fn right_only(m: Comodule) -> Result<Comodule> {
    Comodule::new(m.coring().clone(), m.carrier().as_right(), m.rho().clone())
}

fn push_coring(m: &mut ModelFile, name: &str, c: &Arc<Coring>, left: &str, right: &str) -> Result<()> {
    let carrier = format!("{name}b");
    m.push(&carrier, &[left, right], Object::Bimodule(c.carrier().clone()))?;
    m.push(name, &[&carrier], Object::Coring(c.clone()))
}

fn trivial() -> Result<GalleryFile> {
    let f = f2();
    let mut m = ModelFile::new(f);
    let k = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f))));
    push_coring(&mut m, "K", &k, "ground", "ground")?;
    m.push("M", &["K"], Object::Comodule(Comodule::graded(k, &[0, 0])?))?;
    Ok(GalleryFile {
        name: "trivial",
        description: "trivial coring over F_2 with a 2-dimensional comodule",
        model: m,
    })
}

fn grouplike() -> Result<GalleryFile> {
    let f = f2();
    let mut m = ModelFile::new(f);
    let g = Arc::new(Coring::grouplike(f, 2));
    push_coring(&mut m, "G", &g, "ground", "ground")?;
    m.push("M1", &["G"], Object::Comodule(Comodule::graded(g.clone(), &[0, 1])?))?;
    m.push("M2", &["G"], Object::Comodule(Comodule::graded(g.clone(), &[0, 0, 1])?))?;
    let fmap = Matrix::from_vec(f, 2, 3, vec![1, 0, 0, 0, 0, 1]);
    let gmap = Matrix::from_vec(f, 2, 3, vec![0, 1, 0, 0, 0, 0]);
    m.push("f", &["M1", "M2"], Object::ComoduleMap(fmap))?;
    m.push("g", &["M1", "M2"], Object::ComoduleMap(gmap))?;
    m.push("L", &["G"], Object::LeftComodule(LeftComodule::graded(g.clone(), &[0, 0, 1])?))?;
    let p = MeasuringPairing::canonical(g)?;
    m.push("P", &["*G", "G", "id"], Object::Pairing(Arc::new(p)))?;
    Ok(GalleryFile {
        name: "grouplike",
        description: "grouplike coring F_2[Z/2]: graded comodules, two colinear maps, a left comodule",
        model: m,
    })
}

fn sweedler() -> Result<GalleryFile> {
    let f = f2();
    let mut m = ModelFile::new(f);
    let a = Arc::new(Algebra::f4());
    m.push("F4", &[], Object::Algebra(a.clone()))?;
    let s = Arc::new(Coring::sweedler(a));
    push_coring(&mut m, "S", &s, "F4", "F4")?;
    m.push("R", &["S"], Object::Comodule(right_only(Comodule::regular(s.clone()))?))?;
    let p = MeasuringPairing::canonical(s)?;
    m.push("P", &["*S", "S", "id"], Object::Pairing(Arc::new(p)))?;
    Ok(GalleryFile {
        name: "sweedler",
        description: "Sweedler coring F_4 (x)_F_2 F_4 with its regular comodule",
        model: m,
    })
}

fn nilpotent() -> Result<GalleryFile> {
    let f = f2();
    let mut m = ModelFile::new(f);
    let t = Arc::new(Algebra::truncated_polynomial(f, 2));
    m.push("T", &[], Object::Algebra(t.clone()))?;
    let k = Arc::new(Coring::trivial(Arc::new(Algebra::ground(f))));
    push_coring(&mut m, "K", &k, "ground", "ground")?;
    let p = MeasuringPairing::new(t.clone(), k.clone(), Matrix::from_vec(f, 2, 1, vec![1, 0]))?;
    m.push("k", &["T", "*K"], Object::Morphism(p.kappa.clone()))?;
    m.push("N", &["T", "K", "k"], Object::Pairing(Arc::new(p)))?;
    m.push("Treg", &["ground", "T"], Object::Bimodule(Bimodule::free_right(t, 1)))?;
    Ok(GalleryFile {
        name: "nilpotent",
        description: "pairing of F_2[x]/(x^2) with the trivial coring, x pairing to 0",
        model: m,
    })
}

fn counit() -> Result<GalleryFile> {
    let f = f2();
    let mut m = ModelFile::new(f);
    let g = Arc::new(Coring::grouplike(f, 2));
    push_coring(&mut m, "G", &g, "ground", "ground")?;
    let phi = CoringMorphism::counit_to_trivial(g.clone());
    let k = phi.target.clone();
    push_coring(&mut m, "K", &k, "ground", "ground")?;
    m.push("eps", &["G", "K"], Object::CoringMorphism(phi))?;
    m.push("M", &["G"], Object::Comodule(Comodule::graded(g, &[0, 1])?))?;
    m.push("N1", &["K"], Object::Comodule(Comodule::graded(k.clone(), &[0])?))?;
    m.push("N2", &["K"], Object::Comodule(Comodule::graded(k, &[0, 0])?))?;
    m.push("i", &["N1", "N2"], Object::ComoduleMap(Matrix::from_vec(f, 1, 2, vec![1, 0])))?;
    m.push("q", &["N2", "N1"], Object::ComoduleMap(Matrix::from_vec(f, 2, 1, vec![1, 0])))?;
    Ok(GalleryFile {
        name: "counit",
        description: "counit morphism from the grouplike coring onto the trivial coring over F_2",
        model: m,
    })
}

fn base_change() -> Result<GalleryFile> {
    let f = f2();
    let mut m = ModelFile::new(f);
    let a = Arc::new(Algebra::f4());
    m.push("F4", &[], Object::Algebra(a.clone()))?;
    let inc = AlgebraMorphism::new(Arc::new(Algebra::ground(f)), a, Matrix::from_vec(f, 1, 2, vec![1, 0]))?;
    m.push("inc", &["ground", "F4"], Object::Morphism(inc.clone()))?;
    let phi = CoringMorphism::base_change(inc);
    push_coring(&mut m, "K2", &phi.source, "ground", "ground")?;
    push_coring(&mut m, "K4", &phi.target, "F4", "F4")?;
    let k4 = phi.target.clone();
    m.push("base-change-F4", &["K2", "K4", "inc"], Object::CoringMorphism(phi))?;
    m.push("N0", &["K4"], Object::Comodule(right_only(Comodule::regular(k4))?))?;
    Ok(GalleryFile {
        name: "base_change",
        description: "trivial corings along F_2 -> F_4; valid, but not compatible, so coind is refused",
        model: m,
    })
}

/// The six example files in a fixed order.
pub fn gallery() -> Result<Vec<GalleryFile>> {
    Ok(vec![trivial()?, grouplike()?, sweedler()?, nilpotent()?, counit()?, base_change()?])
}

pub fn gallery_file(name: &str) -> Result<GalleryFile> {
    gallery()?
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| crate::error::Error::UnknownName(name.to_string()))
}

/// Writes every gallery file into `dir` (created if missing).
pub fn write_gallery(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let files = gallery().map_err(std::io::Error::other)?;
    let mut out = Vec::new();
    for g in files {
        let path = dir.join(g.file_name());
        std::fs::write(&path, g.text())?;
        out.push(path);
    }
    Ok(out)
}
