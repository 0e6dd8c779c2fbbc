//! Model file parsing and printing, and determinism of the suites.

mod common;

use common::{corings, fp, pick, rng, small_prime};
use coringlab_core::comodule::Comodule;
use coringlab_core::workbench::gallery::gallery;
use coringlab_core::workbench::model::Object;
use coringlab_core::workbench::random::{random_grouplike_morphism, ComoduleSampler, LeftComoduleSampler};
use coringlab_core::{parse_model, print_model, run_suite, Error, ModelFile, Suite, SuiteConfig};
use proptest::prelude::*;
use rand::Rng;

fn check_parse(text: &str) -> Result<(), TestCaseError> {
    let lines = text.lines().count().max(1);
    match parse_model(text) {
        Ok(m) => {
            // whatever parses must print to something that parses the same
            let printed = print_model(&m);
            let again = parse_model(&printed).map_err(|e| TestCaseError::fail(format!("reparse: {e}")))?;
            prop_assert_eq!(print_model(&again), printed);
        }
        Err(Error::Parse { line, .. }) => prop_assert!((1..=lines).contains(&line), "line {} of {}", line, lines),
        Err(e) => prop_assert!(false, "non-parse error {e}"),
    }
    Ok(())
}

fn mutate(rng: &mut impl Rng, text: &str) -> String {
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    for _ in 0..rng.gen_range(1..4) {
        if lines.is_empty() {
            break;
        }
        let i = rng.gen_range(0..lines.len());
        match rng.gen_range(0..5) {
            0 => {
                lines.remove(i);
            }
            1 => {
                let j = rng.gen_range(0..lines.len());
                lines.swap(i, j);
            }
            2 => {
                let dup = lines[i].clone();
                lines.insert(i, dup);
            }
            3 => {
                // change one digit
                let l = &mut lines[i];
                if let Some(pos) = l.find(|c: char| c.is_ascii_digit()) {
                    let d = char::from(b'0' + rng.gen_range(0..10u8));
                    l.replace_range(pos..pos + 1, &d.to_string());
                }
            }
            _ => {
                let l = &mut lines[i];
                if !l.is_empty() {
                    let cut = rng.gen_range(0..l.len());
                    if l.is_char_boundary(cut) {
                        l.truncate(cut);
                    }
                }
            }
        }
    }
    lines.join("\n")
}

fn random_model(rng: &mut impl Rng, p: u32) -> ModelFile {
    let f = fp(p);
    let mut m = ModelFile::new(f);
    let c = pick(rng, &corings(f));
    let base = if c.base().dim() == 1 {
        "ground"
    } else {
        m.push("A", &[], Object::Algebra(c.base().clone())).unwrap();
        "A"
    };
    m.push("Cb", &[base, base], Object::Bimodule(c.carrier().clone())).unwrap();
    m.push("C", &["Cb"], Object::Coring(c.clone())).unwrap();
    let s = ComoduleSampler::new(c.clone()).unwrap();
    for i in 0..rng.gen_range(1..3) {
        let x = s.sample(rng, 3).unwrap();
        let x = Comodule::new(c.clone(), x.carrier().as_right(), x.rho().clone()).unwrap();
        m.push(&format!("M{i}"), &["C"], Object::Comodule(x)).unwrap();
    }
    let l = LeftComoduleSampler::new(c.clone()).unwrap().sample(rng, 3).unwrap();
    m.push("L", &["C"], Object::LeftComodule(l)).unwrap();
    let phi = random_grouplike_morphism(rng, f, 3);
    m.push("Gb", &["ground", "ground"], Object::Bimodule(phi.source.carrier().clone())).unwrap();
    m.push("G", &["Gb"], Object::Coring(phi.source.clone())).unwrap();
    m.push("Hb", &["ground", "ground"], Object::Bimodule(phi.target.carrier().clone())).unwrap();
    m.push("H", &["Hb"], Object::Coring(phi.target.clone())).unwrap();
    m.push("phi", &["G", "H"], Object::CoringMorphism(phi)).unwrap();
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parser_is_total_on_arbitrary_text(text in "(field p=[0-9]{1,2}\n)?[ -~\n]{0,200}") {
        check_parse(&text)?;
    }

    #[test]
    fn parser_is_total_on_mutated_models(seed in any::<u64>(), which in 0usize..6) {
        let mut r = rng(seed);
        let text = gallery().unwrap()[which].text();
        check_parse(&mutate(&mut r, &text))?;
    }

    #[test]
    fn random_models_round_trip(seed in any::<u64>(), p in small_prime()) {
        let mut r = rng(seed);
        let m = random_model(&mut r, p);
        let text = print_model(&m);
        let back = parse_model(&text).unwrap();
        prop_assert_eq!(print_model(&back), text);
        for e in m.entries() {
            let other = back.get(&e.name).unwrap();
            prop_assert_eq!(other.kind(), e.kind());
            match (&e.object, &other.object) {
                (Object::Comodule(a), Object::Comodule(b)) => prop_assert_eq!(a.rho(), b.rho()),
                (Object::Coring(a), Object::Coring(b)) => prop_assert_eq!(a.delta(), b.delta()),
                _ => {}
            }
        }
    }
}

#[test]
fn suites_are_deterministic() {
    let cfg = SuiteConfig { trials: 8, seed: 3, max_dim: 3 };
    for g in gallery().unwrap().into_iter().filter(|g| ["grouplike", "counit"].contains(&g.name)) {
        for s in Suite::ALL {
            let a: Vec<String> = run_suite(&g.model, s, &cfg).iter().map(|v| v.to_string()).collect();
            let b: Vec<String> = run_suite(&g.model, s, &cfg).iter().map(|v| v.to_string()).collect();
            assert_eq!(a, b, "{} {s}", g.name);
        }
    }
}

#[test]
fn seeds_change_random_instances() {
    let g = gallery().unwrap().into_iter().find(|g| g.name == "counit").unwrap();
    let run = |seed| -> Vec<String> {
        let cfg = SuiteConfig { trials: 10, seed, max_dim: 3 };
        run_suite(&g.model, Suite::AdjunctionMain, &cfg).iter().map(|v| v.to_string()).collect()
    };
    assert_ne!(run(1), run(2));
}
