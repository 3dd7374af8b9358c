use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::cache::Cache;
use crate::engine::{CliError, Engine};
use crate::hunt::{cmd_hunt, MAX_FACTORS};
use crate::report::{format_alpha, format_spectrum};
use crate::verify::{cmd_verify_counterexample, cmd_verify_theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sotype",
    version,
    about = "Element-order spectra and same-order types of finite groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Directory for cached reports.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache_dir: Option<PathBuf>,

    /// Largest group the closure may enumerate.
    #[arg(long, global = true, value_name = "N", default_value_t = sotype_core::DEFAULT_CAP)]
    pub max_elements: usize,

    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Same-order type: the set of distinct element-order counts.
    Alpha { expr: String },
    /// Number of elements of each order.
    Spectrum { expr: String },
    /// Full report: spectrum, alpha, simplicity, solvability, center.
    Invariants { expr: String },
    /// Reproduce published claims.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Search products of small groups for alpha collisions with a simple group.
    Hunt {
        #[arg(long)]
        order: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=MAX_FACTORS as u64))]
        max_factors: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Alpha cardinalities of the simple groups whose order has three prime divisors.
    Theorem,
    /// Groups of order 168 sharing the alpha cardinality of PSL(2,7).
    Counterexample,
}

fn render<T: Serialize + std::fmt::Display>(json: bool, value: &T) -> String {
    if json {
        serde_json::to_string_pretty(value).expect("reports serialize")
    } else {
        value.to_string()
    }
}

/// Runs a parsed command line, writing results to `out`, and returns the
/// process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.options.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    // Output is assembled after the parallel work finishes.
    match pool.install(|| execute(cli)) {
        Ok((code, text)) => match writeln!(out, "{text}") {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Serialize)]
struct AlphaOutput<'a> {
    expression: &'a str,
    alpha: &'a [u64],
    alpha_cardinality: usize,
}

impl std::fmt::Display for AlphaOutput<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "alpha({}) = {} (|alpha| = {})",
            self.expression,
            format_alpha(self.alpha),
            self.alpha_cardinality
        )
    }
}

#[derive(Serialize)]
struct SpectrumOutput<'a> {
    expression: &'a str,
    order: u64,
    spectrum: &'a std::collections::BTreeMap<u64, u64>,
}

impl std::fmt::Display for SpectrumOutput<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} (order {}): {}",
            self.expression,
            self.order,
            format_spectrum(self.spectrum)
        )
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let opts = &cli.options;
    let cache = opts.cache_dir.as_ref().map(Cache::open).transpose()?;
    let engine = Engine::new(opts.max_elements, cache);
    let json = opts.json;
    Ok(match &cli.command {
        Command::Alpha { expr } => {
            let r = engine.report_text(expr)?;
            let view = AlphaOutput {
                expression: &r.expression,
                alpha: &r.alpha,
                alpha_cardinality: r.alpha_cardinality,
            };
            (EXIT_OK, render(json, &view))
        }
        Command::Spectrum { expr } => {
            let r = engine.report_text(expr)?;
            let view = SpectrumOutput {
                expression: &r.expression,
                order: r.order,
                spectrum: &r.spectrum,
            };
            (EXIT_OK, render(json, &view))
        }
        Command::Invariants { expr } => (EXIT_OK, render(json, &engine.report_text(expr)?)),
        Command::Verify(VerifyCommand::Theorem) => {
            let r = cmd_verify_theorem(&engine)?;
            (
                if r.passed { EXIT_OK } else { EXIT_ASSERTION },
                render(json, &r),
            )
        }
        Command::Verify(VerifyCommand::Counterexample) => {
            let r = cmd_verify_counterexample(&engine)?;
            (
                if r.passed { EXIT_OK } else { EXIT_ASSERTION },
                render(json, &r),
            )
        }
        Command::Hunt { order, max_factors } => (
            EXIT_OK,
            render(json, &cmd_hunt(&engine, *order, *max_factors as usize)?),
        ),
    })
}
