//! Command-line front end for the guessing-game experiments.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use bitguess_cli::{
    analytic_table, oracle_check, parse_qualities, parse_reasoners, render_analytic,
    render_cells, render_surface, run_figure, run_grid, write_output, ConfigOverlay,
    ExperimentConfig, FigureId, FigureTable, GridCellResult,
};

/// Sample means further than this many standard errors from the closed form
/// get flagged (and fail the run).
const FLAG_STANDARD_ERRORS: f64 = 5.0;

#[derive(Parser)]
#[command(
    name = "bitguess",
    version,
    about = "Guessing-game reasoning experiments: closed-form tables, Monte Carlo runs, figure datasets, and verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit closed-form score tables over the magnitude grid.
    Analytic(CommonArgs),
    /// Run the Monte Carlo grid and emit per-cell statistics.
    Simulate(CommonArgs),
    /// Emit a named dataset: fig5, fig6/7-diagonal, or fig8/9-surfaces.
    Figure {
        /// Figure id.
        id: String,
        #[command(flatten)]
        args: CommonArgs,
    },
    /// Cross-check every computation route; nonzero exit on residuals.
    OracleCheck(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// `key = value` config file; flags override file values.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Games per grid cell (default 10000).
    #[arg(long, value_name = "N")]
    n_games: Option<u64>,
    /// Master seed for the per-cell streams (default 1).
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,
    /// Magnitude grid spacing (default 0.05); also the mesh spacing of
    /// analytic surfaces.
    #[arg(long, value_name = "STEP")]
    grid_step: Option<f64>,
    /// Machineries to run: classical, quantum, or both (comma list ok).
    #[arg(long, value_name = "LIST")]
    reasoner: Option<String>,
    /// Hint qualities: well, ill, unbiased, or all (comma list ok).
    #[arg(long, value_name = "LIST")]
    quality: Option<String>,
    /// Output file (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn resolve(&self) -> anyhow::Result<ExperimentConfig> {
        let file = match &self.config {
            Some(path) => ConfigOverlay::from_file(path)?,
            None => ConfigOverlay::default(),
        };
        let flags = ConfigOverlay {
            n_games: self.n_games,
            seed: self.seed,
            grid_step: self.grid_step,
            reasoners: self.reasoner.as_deref().map(parse_reasoners).transpose()?,
            qualities: self.quality.as_deref().map(parse_qualities).transpose()?,
            out: self.out.clone(),
        };
        Ok(file.overridden_by(flags).into_config()?)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> anyhow::Result<ExitCode> {
    match Cli::parse().command {
        Command::Analytic(args) => {
            let config = args.resolve()?;
            let rows = analytic_table(&config)?;
            emit(&config, &render_analytic(&rows))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate(args) => {
            let config = args.resolve()?;
            let rows = run_grid(&config)?;
            emit(&config, &render_cells(&rows))?;
            Ok(consistency_gate(&rows))
        }
        Command::Figure { id, args } => {
            let config = args.resolve()?;
            match run_figure(FigureId::parse(&id)?, &config)? {
                FigureTable::Cells(rows) => {
                    emit(&config, &render_cells(&rows))?;
                    Ok(consistency_gate(&rows))
                }
                FigureTable::Surface(rows) => {
                    emit(&config, &render_surface(&rows))?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::OracleCheck(args) => {
            let config = args.resolve()?;
            let report = oracle_check(config.n_games, config.seed);
            print!("{report}");
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn emit(config: &ExperimentConfig, contents: &str) -> anyhow::Result<()> {
    write_output(config.out.as_deref(), contents).with_context(|| {
        format!(
            "cannot write output{}",
            config
                .out
                .as_deref()
                .map(|p| format!(" to {}", p.display()))
                .unwrap_or_default()
        )
    })
}

/// Flag any cell whose sample mean strays beyond the standard-error gate.
fn consistency_gate(rows: &[GridCellResult]) -> ExitCode {
    let flagged: Vec<&GridCellResult> = rows
        .iter()
        .filter(|row| !row.within_standard_errors(FLAG_STANDARD_ERRORS))
        .collect();
    if flagged.is_empty() {
        return ExitCode::SUCCESS;
    }
    for row in &flagged {
        eprintln!(
            "flagged: ({}, {}, {}, {}) xi_mean {} vs analytic {} exceeds {} standard errors ({})",
            row.mag0,
            row.mag1,
            row.quality.label(),
            row.reasoner.label(),
            row.xi_mean,
            row.xi_analytic,
            FLAG_STANDARD_ERRORS,
            row.xi_stderr,
        );
    }
    eprintln!("{} of {} cells failed the consistency gate", flagged.len(), rows.len());
    ExitCode::FAILURE
}
