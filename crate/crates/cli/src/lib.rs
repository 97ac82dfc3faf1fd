//! The `counit-resolve` command-line tool as a library, so that tests can
//! drive it without spawning processes.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use counit_core::{RatFunc, Rational};
use serde_json::json;

use crate::commands::{run_command, Context};
use crate::config::{load_config, CharacterSpec, FieldName, RunConfig};
use crate::error::CliError;
use crate::report::{CheckResult, Report, Status};

pub const CACHE_ENV: &str = "COUNIT_RESOLVE_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Gb,
    VerifyHopf,
    Resolution,
    Exactness,
    Homology,
    Ext,
    Poincare,
    BialgebraCohomology,
    Cogroupoid,
    Transport,
    Oracle,
}

#[derive(Debug, Parser)]
#[command(name = "counit-resolve", version, about = "Exact computations with the Hopf algebras B(E) of bilinear forms")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long)]
    pub config: PathBuf,
    /// Also write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Gröbner basis cache directory; `COUNIT_RESOLVE_CACHE` takes precedence.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub slack: Option<usize>,
    #[arg(long)]
    pub budget_mb: Option<usize>,
    /// Exactness position, 0 (injectivity) to 3.
    #[arg(long)]
    pub position: Option<usize>,
    /// Character by name (`eps`, `Phi`, `Phi^k`).
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub assume_cosemisimple: bool,
    /// Run the complex and Yetter-Drinfeld checks in `resolution`.
    #[arg(long)]
    pub check: bool,
}

/// What a run produced: exit code, human text and the JSON report.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub text: String,
    pub json: Option<String>,
    pub warnings: Vec<String>,
}

fn apply_overrides(mut cfg: RunConfig, args: &Args) -> RunConfig {
    if args.degree.is_some() {
        cfg.degree = args.degree;
    }
    if args.slack.is_some() {
        cfg.slack = args.slack;
    }
    if args.budget_mb.is_some() {
        cfg.budget_mb = args.budget_mb;
    }
    if args.position.is_some() {
        cfg.position = args.position;
    }
    if args.k_max.is_some() {
        cfg.k_max = args.k_max;
    }
    if let Some(a) = &args.alpha {
        cfg.alpha = Some(CharacterSpec::Named(a.clone()));
    }
    if let Some(b) = &args.beta {
        cfg.beta = Some(CharacterSpec::Named(b.clone()));
    }
    cfg.assume_cosemisimple |= args.assume_cosemisimple;
    cfg
}

fn cache_dir(args: &Args) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from).or_else(|| args.cache_dir.clone())
}

/// Runs one command without touching stdout, stderr or the `--json` file.
pub fn execute(args: &Args) -> Outcome {
    let cfg = match load_config(&args.config).and_then(|c| apply_overrides(c, args).validate()) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                exit_code: e.exit_code(),
                text: format!("error: {e}\n"),
                json: None,
                warnings: Vec::new(),
            }
        }
    };
    let mut report = Report::new(cfg.clone());
    let mut ctx = Context {
        config: cfg.clone(),
        cache_dir: cache_dir(args),
        check: args.check,
        warnings: Vec::new(),
    };
    let result = match cfg.field {
        FieldName::Rationals => run_command::<Rational>(args.command, &mut ctx, &mut report),
        FieldName::RationalFunctions => run_command::<RatFunc>(args.command, &mut ctx, &mut report),
    };
    let exit_code = match &result {
        Ok(()) => report.exit_code(),
        Err(e) => {
            report.push(CheckResult::new("error", Status::Fail, json!({ "message": e.to_string() })));
            e.exit_code()
        }
    };
    let text = report.to_text();
    Outcome {
        exit_code,
        text,
        json: Some(report.to_json()),
        warnings: ctx.warnings,
    }
}

/// Runs one command, printing the text report and writing `--json` if given.
pub fn run(args: &Args) -> i32 {
    let out = execute(args);
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    if out.json.is_none() {
        eprint!("{}", out.text);
        return out.exit_code;
    }
    print!("{}", out.text);
    if let (Some(path), Some(json)) = (&args.json, &out.json) {
        if let Err(e) = std::fs::write(path, json) {
            let err = CliError::Io {
                path: path.clone(),
                message: e.to_string(),
            };
            eprintln!("error: {err}");
            return err.exit_code();
        }
    }
    out.exit_code
}
