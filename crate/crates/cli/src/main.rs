use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;
use tait_core::checker::{ingest, run_checks, write_report, Check, InvariantCache, Invariants, ReportFormat, Table};
use tait_core::moves::{greedy_simplify, random_move_walk_trace};
use tait_core::{BracketConfig, Diagram, Engine};

const CACHE_ENV: &str = "TAIT_LAB_CACHE";

#[derive(Parser)]
#[command(name = "tait-lab", version, about = "Knot-table invariants and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of every table entry (or one, with --name) as JSON lines.
    Invariants {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value = "auto")]
        engine: Engine,
    },
    /// Run checks over a table and write a CSV or JSON report.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "tait1,tait24,semiadequacy")]
        checks: String,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value = "csv")]
        format: ReportFormat,
        #[arg(long, default_value = "auto")]
        engine: Engine,
        /// Invariant cache file; TAIT_LAB_CACHE takes precedence.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Remove kinks and bigons greedily and print the resulting PD code.
    Simplify {
        #[arg(long)]
        pd: String,
    },
    /// Apply a seeded random Reidemeister walk and print the result with its moves.
    Walk {
        #[arg(long)]
        pd: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 14)]
        max_crossings: usize,
    },
}

fn parse_pd(text: &str) -> anyhow::Result<Diagram> {
    Diagram::parse_pd(text).with_context(|| format!("bad PD code {text:?}"))
}

fn load(path: &Path) -> anyhow::Result<Table> {
    let table = ingest(path)?;
    for e in &table.errors {
        eprintln!("{}:{}: {}", path.display(), e.line, e.message);
    }
    Ok(table)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Invariants { input, name, engine } => {
            let table = load(&input)?;
            let cfg = BracketConfig::with_engine(engine);
            let mut found = false;
            for e in table.entries.iter().filter(|e| name.as_ref().is_none_or(|n| *n == e.name)) {
                found = true;
                let inv = Invariants::compute(&e.diagram, &cfg)?;
                println!("{}", json!({ "name": e.name, "invariants": inv }));
            }
            if let Some(n) = name.filter(|_| !found) {
                bail!("no entry named {n:?}");
            }
            Ok(if table.errors.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Report { input, checks, output, format, engine, cache } => {
            let checks = Check::parse_list(&checks)?;
            if checks.is_empty() {
                bail!("no checks requested");
            }
            let table = load(&input)?;
            let cache_path = std::env::var_os(CACHE_ENV).map(PathBuf::from).or(cache);
            let mut cache = match &cache_path {
                Some(p) => Some(InvariantCache::load(p)?),
                None => None,
            };
            let report = run_checks(&table, &checks, &BracketConfig::with_engine(engine), cache.as_mut())?;
            if let (Some(c), Some(p)) = (&cache, &cache_path) {
                c.save(p)?;
            }
            write_report(&report, format, &output)?;
            for f in &report.summary.failures {
                eprintln!("FAIL {} {}", f.check.name(), f.name);
            }
            Ok(if !table.errors.is_empty() {
                ExitCode::from(2)
            } else if report.has_failures() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Simplify { pd } => {
            let d = parse_pd(&pd)?;
            let s = greedy_simplify(&d);
            println!(
                "{}",
                json!({ "pd": s.to_string(), "crossings": s.crossing_count(), "unknot": s.is_unknot_diagram() })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Walk { pd, steps, seed, max_crossings } => {
            let d = parse_pd(&pd)?;
            let (out, moves) = random_move_walk_trace(&d, steps, max_crossings, seed);
            println!(
                "{}",
                json!({ "seed": seed, "pd": out.to_string(), "crossings": out.crossing_count(), "moves": moves })
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Exit status: 0 clean, 1 some check failed, 2 unusable input (including
/// skipped table rows) or any other error.
fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
