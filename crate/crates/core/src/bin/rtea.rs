use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rtea::number::{parse_rational, ExtEnergy, Rational, TimeDur};
use rtea::report::{self, CheckKind, Outcome, What};
use rtea::RteaModel;

/// Decide reachability, coverability and Büchi acceptance for real-time energy automata.
#[derive(Parser)]
#[command(name = "rtea", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer a decision question; exits 0 for yes and 1 for no.
    Check {
        kind: Kind,
        #[command(flatten)]
        point: Point,
        /// Energy the accepting state must be reached with (`cover` only).
        #[arg(long, value_parser = parse_rational)]
        target: Option<Rational>,
        /// Cross-check against a brute-force oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Evaluate the behaviour |A| at (x0, time).
    Eval {
        #[command(flatten)]
        point: Point,
    },
    /// Write the behaviour or the star matrix as JSON with region pieces.
    Dump {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum, default_value = "behavior")]
        what: WhatArg,
    },
    /// Bring an atom sequence `(rate, price, bound), …` into normal form.
    Normalize {
        #[arg(long)]
        atoms: String,
    },
}

#[derive(clap::Args)]
struct Point {
    #[arg(long)]
    model: PathBuf,
    /// Initial energy: a decimal, `p/q` or `inf`.
    #[arg(long)]
    x0: ExtEnergy,
    /// Time budget: a decimal, `p/q` or `inf`.
    #[arg(long)]
    time: TimeDur,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Reach,
    Cover,
    Buchi,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Behavior,
    Star,
}

fn load(path: &PathBuf) -> Result<(RteaModel, String), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let model = RteaModel::parse(&text)
        .map_err(|e| format!("{}: error[{}]: {e}", path.display(), e.code()))?;
    Ok((model, path.display().to_string()))
}

fn run(cli: Cli) -> Result<Outcome, String> {
    match cli.command {
        Command::Check {
            kind,
            point,
            target,
            verify,
        } => {
            let (model, name) = load(&point.model)?;
            let kind = match kind {
                Kind::Reach => CheckKind::Reach,
                Kind::Cover => CheckKind::Cover,
                Kind::Buchi => CheckKind::Buchi,
            };
            report::run_check(
                &model,
                &name,
                kind,
                &point.x0,
                &point.time,
                target.as_ref(),
                verify,
            )
            .map_err(|e| e.to_string())
        }
        Command::Eval { point } => {
            let (model, name) = load(&point.model)?;
            Ok(report::run_eval(&model, &name, &point.x0, &point.time))
        }
        Command::Dump { model, what } => {
            let (model, name) = load(&model)?;
            let what = match what {
                WhatArg::Behavior => What::Behavior,
                WhatArg::Star => What::Star,
            };
            Ok(report::run_dump(&model, &name, what))
        }
        Command::Normalize { atoms } => report::run_normalize(&atoms).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(out.exit_code as u8)
        }
        Err(msg) => {
            eprintln!("rtea: {msg}");
            ExitCode::from(2)
        }
    }
}
