use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coringlab_core::workbench::compute::EXPRESSIONS;
use coringlab_core::workbench::{compute, parse_model, run_suite, validate_model, write_gallery, ModelFile, Suite, SuiteConfig, VerdictReport};
use coringlab_core::{Error, Verdict};

#[derive(Parser)]
#[command(name = "coringlab", version, about = "Exact finite-field workbench for corings and comodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every validator on a model file.
    Validate {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one expression, e.g. `cotensor M L` or `coind eps N`.
    #[command(after_help = expressions_help())]
    Compute {
        file: PathBuf,
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (or `all`) on a model file.
    Verify {
        file: PathBuf,
        /// axioms, adjunction-sg, adjunction-main, natural-iso,
        /// cotensor-center, rat-sp-agreement or all
        suite: String,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-dim", default_value_t = 3)]
        max_dim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the example model files into a directory.
    Gallery {
        dir: PathBuf,
    },
}

fn expressions_help() -> String {
    let mut s = String::from("Expressions:\n");
    for e in EXPRESSIONS {
        s.push_str("  ");
        s.push_str(e);
        s.push('\n');
    }
    s
}

/// A usage or IO problem: exit status 2.
struct Fatal(String);

fn parse_suites(s: &str) -> Result<Vec<Suite>, Fatal> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    s.parse::<Suite>()
        .map(|x| vec![x])
        .map_err(|_| Fatal(format!("unknown suite `{s}`")))
}

fn parse_failure(e: &Error) -> Verdict {
    Verdict::fail("parse", e.to_string())
}

/// Reads and parses the model; a parse error is reported as a FAIL line.
fn load(file: &Path, command: String) -> Result<(VerdictReport, Option<ModelFile>), Fatal> {
    let bytes = fs::read(file).map_err(|e| Fatal(format!("cannot read {}: {e}", file.display())))?;
    let mut report = VerdictReport::new(command, &bytes);
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(_) => {
            report.push(Verdict::fail("parse", "input is not UTF-8"));
            return Ok((report, None));
        }
    };
    match parse_model(&text) {
        Ok(m) => Ok((report, Some(m))),
        Err(e) => {
            report.push(parse_failure(&e));
            Ok((report, None))
        }
    }
}

fn emit(report: &VerdictReport, out: Option<&Path>) -> Result<ExitCode, Fatal> {
    let text = report.render();
    match out {
        Some(p) => fs::write(p, &text).map_err(|e| Fatal(format!("cannot write {}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn run(cli: Cli) -> Result<ExitCode, Fatal> {
    match cli.command {
        Command::Validate { file, out } => {
            let (mut report, model) = load(&file, "validate".into())?;
            if let Some(m) = model {
                report.extend(validate_model(&m));
            }
            emit(&report, out.as_deref())
        }
        Command::Compute { file, expr, out } => {
            let expr = expr.join(" ");
            let (mut report, model) = load(&file, format!("compute {expr}"))?;
            if let Some(m) = model {
                report.push(compute(&m, &expr));
            }
            emit(&report, out.as_deref())
        }
        Command::Verify {
            file,
            suite,
            trials,
            seed,
            max_dim,
            out,
        } => {
            let suites = parse_suites(&suite)?;
            let cfg = SuiteConfig { trials, seed, max_dim };
            let command = format!("verify {suite} --trials {trials} --seed {seed} --max-dim {max_dim}");
            let (mut report, model) = load(&file, command)?;
            if let Some(m) = model {
                for s in suites {
                    report.extend(run_suite(&m, s, &cfg));
                }
            }
            emit(&report, out.as_deref())
        }
        Command::Gallery { dir } => {
            let paths = write_gallery(&dir).map_err(|e| Fatal(format!("cannot write gallery to {}: {e}", dir.display())))?;
            for p in paths {
                println!("{}", p.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("coringlab: {msg}");
            ExitCode::from(2)
        }
    }
}
