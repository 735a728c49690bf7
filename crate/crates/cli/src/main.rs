use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use gtc_cli::check::{self, CheckCommand};
use gtc_cli::report::markdown;
use gtc_cli::suite::{run_suite, ReportFormat, SuiteConfig};

/// Group coloring and group choosability checks for graphs and their total graphs.
#[derive(Parser)]
#[command(name = "gtc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check. Exit status 0 when it holds, 1 when it fails, 2 on budget exhaustion or error.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
        /// Print the full report as JSON.
        #[arg(long, global = true)]
        json: bool,
        /// Write the witness of a failing check to this file.
        #[arg(long, global = true)]
        witness_out: Option<PathBuf>,
    },
    /// Run the verification suite and write its reports.
    Suite {
        /// JSON suite config; defaults apply to missing fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Directory for report.json and report.md.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the config format.
        #[arg(long, value_enum)]
        format: Option<ReportFormat>,
        /// Only these criteria, comma separated.
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u8>,
    },
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { check, json, witness_out } => {
            let report = check::run(&check)?;
            if let (Some(path), Some(w)) = (&witness_out, &report.witness) {
                std::fs::write(path, serde_json::to_string_pretty(w)?).with_context(|| format!("cannot write {}", path.display()))?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else if report.check == "col" {
                println!("{}", report.summary);
            } else {
                let group = report.group.as_deref().map(|g| format!(" over {g}")).unwrap_or_default();
                println!("{} {}{group}: {}", report.check, report.target, report.summary);
            }
            Ok(report.outcome.exit_code())
        }
        Command::Suite { config, out, seed, format, criteria } => {
            let mut cfg = match &config {
                Some(path) => {
                    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                    SuiteConfig::from_json(&text)?
                }
                None => SuiteConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(f) = format {
                cfg.format = f;
            }
            if !criteria.is_empty() {
                cfg.criteria = criteria;
            }
            let report = run_suite(&cfg)?;
            std::fs::create_dir_all(&out).with_context(|| format!("cannot create {}", out.display()))?;
            if matches!(cfg.format, ReportFormat::Json | ReportFormat::Both) {
                std::fs::write(out.join("report.json"), serde_json::to_string_pretty(&report)? + "\n")?;
            }
            if matches!(cfg.format, ReportFormat::Markdown | ReportFormat::Both) {
                std::fs::write(out.join("report.md"), markdown(&report))?;
            }
            for c in &report.criteria {
                println!("criterion {:>2}: {:?} ({} claims)", c.id, c.status, c.entries.len());
            }
            let s = &report.summary;
            println!(
                "{} claims: {} hold, {} fail ({} expected), {} budget-exceeded, {} errors",
                s.entries, s.holds, s.fails, s.fails_expected, s.budget_exceeded, s.errors
            );
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
