//! One-shot computations named on the command line, e.g. `cotensor M L`.

use crate::comodule::{hom_colinear, Comodule};
use crate::dual::{DualRing, DualSide};
use crate::error::{Error, Result};
use crate::functors::{ad_induction, coind_compatible, coind_measuring, corestriction, cotensor, induction};
use crate::report::Verdict;
use crate::sharp::SharpSpaces;

use super::model::{ModelFile, Object};
use super::suites::basis_text;

pub const EXPRESSIONS: [&str; 10] = [
    "rat <pairing> <module-or-comodule>",
    "cotensor <comodule> <left-comodule>",
    "coind <coring-morphism> <comodule>",
    "coind_measuring <pairing-morphism> <comodule>",
    "induction <coring-morphism> <comodule>",
    "corestriction <coring-morphism> <comodule>",
    "ad_induction <coring-morphism> <comodule>",
    "sharp <coring-morphism>",
    "dual <coring> left|right|bi",
    "hom <comodule> <comodule>",
];

fn comodule_line(c: &Comodule) -> String {
    let v = c.validate();
    format!("dim {}; comodule axioms: {}", c.dim(), v.summary())
}

fn args<'a>(words: &'a [&'a str], n: usize) -> Result<&'a [&'a str]> {
    if words.len() != n + 1 {
        return Err(Error::hypothesis(format!("`{}` takes {n} argument(s)", words[0])));
    }
    Ok(&words[1..])
}

fn eval(model: &ModelFile, words: &[&str]) -> Result<Verdict> {
    let check = format!("compute {}", words.join(" "));
    let op = *words.first().ok_or_else(|| Error::hypothesis("empty expression"))?;
    let details = match op {
        "rat" => {
            let a = args(words, 2)?;
            let p = model.pairing(a[0])?;
            let m = match &model.get(a[1])?.object {
                Object::Bimodule(b) => b.clone(),
                Object::Comodule(c) => p.module_from_comodule(c)?,
                _ => return Err(Error::hypothesis(format!("`{}` is neither a module nor a comodule", a[1]))),
            };
            let r = p.rat(&m)?;
            format!("dim {} of {}; basis {}", r.space.dim(), m.dim(), basis_text(&r.space))
        }
        "cotensor" => {
            let a = args(words, 2)?;
            let c = cotensor(model.comodule(a[0])?, model.left_comodule(a[1])?)?;
            format!("dim {} in M (x) N of dim {}; basis {}", c.dim(), c.chain.dim(), basis_text(&c.space))
        }
        "coind" => {
            let a = args(words, 2)?;
            let c = coind_compatible(model.coring_morphism(a[0])?, model.comodule(a[1])?)?;
            format!("{}; inside Hom of dim {}", comodule_line(c.comodule()), c.hom.dim())
        }
        "coind_measuring" => {
            let a = args(words, 2)?;
            let c = coind_measuring(model.pairing_morphism(a[0])?, model.comodule(a[1])?)?;
            format!("{}; inside Hom of dim {}", comodule_line(c.comodule()), c.hom.dim())
        }
        "induction" => {
            let a = args(words, 2)?;
            comodule_line(&induction(model.coring_morphism(a[0])?, model.comodule(a[1])?)?.comodule)
        }
        "corestriction" => {
            let a = args(words, 2)?;
            comodule_line(&corestriction(model.coring_morphism(a[0])?, model.comodule(a[1])?)?)
        }
        "ad_induction" => {
            let a = args(words, 2)?;
            let c = ad_induction(model.coring_morphism(a[0])?, model.comodule(a[1])?)?;
            format!("{}; basis {}", comodule_line(&c.comodule), basis_text(&c.cotensor.space))
        }
        "sharp" => {
            let a = args(words, 1)?;
            let s = SharpSpaces::new(model.coring_morphism(a[0])?)?;
            format!(
                "dim #C {}, dim _#C {}, dim _#D {}; compatible={}",
                s.hash_c.dim(),
                s.img_beta.dim(),
                s.img_theta.dim(),
                s.compatible
            )
        }
        "dual" => {
            let a = args(words, 2)?;
            let side = match a[1] {
                "left" => DualSide::Left,
                "right" => DualSide::Right,
                "bi" => DualSide::Bi,
                s => return Err(Error::hypothesis(format!("unknown side `{s}`"))),
            };
            let d = DualRing::new(model.coring(a[0])?, side)?;
            let v = d.algebra.validate();
            if !v.is_ok() {
                return Ok(Verdict::fail(check, v.summary()));
            }
            format!("dim {}; algebra axioms: {}", d.dim(), v.summary())
        }
        "hom" => {
            let a = args(words, 2)?;
            let h = hom_colinear(model.comodule(a[0])?, model.comodule(a[1])?)?;
            format!("dim {}", h.dim())
        }
        _ => return Err(Error::UnknownName(op.to_string())),
    };
    Ok(Verdict::pass(check, details))
}

/// Evaluates `expr`; unmet hypotheses come back as a FAIL line.
pub fn compute(model: &ModelFile, expr: &str) -> Verdict {
    let words: Vec<&str> = expr.split_whitespace().collect();
    eval(model, &words).unwrap_or_else(|e| Verdict::fail(format!("compute {}", words.join(" ")), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::super::gallery::gallery_file;
    use super::*;
    use crate::report::Status;

    #[test]
    fn base_change_coind_is_refused() {
        let g = gallery_file("base_change").unwrap().model;
        let v = compute(&g, "coind base-change-F4 N0");
        assert_eq!(v.status, Status::Fail);
        assert!(v.details.starts_with("not compatible"), "{v}");
    }

    #[test]
    fn grouplike_expressions() {
        let g = gallery_file("grouplike").unwrap().model;
        let v = compute(&g, "cotensor M1 L");
        assert_eq!(v.status, Status::Pass);
        assert!(v.details.starts_with("dim 3 in M (x) N of dim 6"), "{v}");
        assert_eq!(compute(&g, "hom M1 M2").details, "dim 3");
        assert_eq!(compute(&g, "rat P M2").details, "dim 3 of 3; basis [1 0 0; 0 1 0; 0 0 1]");
        assert_eq!(compute(&g, "frobnicate").status, Status::Fail);
        assert_eq!(compute(&g, "hom M1").status, Status::Fail);
    }

    #[test]
    fn counit_coinduction_of_ground_field() {
        let g = gallery_file("counit").unwrap().model;
        let v = compute(&g, "coind eps N1");
        assert!(v.details.starts_with("dim 2;"), "{v}");
        assert_eq!(compute(&g, "sharp eps").details.rsplit(';').next(), Some(" compatible=true"));
    }
}
