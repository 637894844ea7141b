//! Library half of the experiment runner: configuration, Monte Carlo
//! execution, figure datasets, verification sweeps, and table rendering.
//! The `bitguess` binary is a thin clap front end over these pieces.

pub mod config;
pub mod figures;
pub mod oracle;
pub mod report;
pub mod runner;

pub use config::{
    parse_qualities, parse_reasoners, ConfigError, ConfigOverlay, ExperimentConfig,
    DEFAULT_GRID_STEP, DEFAULT_N_GAMES, DEFAULT_SEED, GRID_MAX,
};
pub use figures::{run_figure, FigureId, FigureTable, SurfaceRow};
pub use oracle::{oracle_check, OracleReport, SCORE_TOLERANCE, STRUCTURAL_TOLERANCE};
pub use report::{
    render_analytic, render_cells, render_surface, sig12, write_output, ANALYTIC_HEADER,
    SIMULATION_HEADER, SURFACE_HEADER,
};
pub use runner::{
    analytic_table, derive_cell_seed, grid_cells, run_cell, run_cells, run_grid, AnalyticRow,
    CellConfig, GridCellResult,
};

/// Errors from the runner layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Configuration problems, surfaced before any game is played.
    #[error(transparent)]
    Config(#[from] ConfigError),
    /// Domain errors from the game library.
    #[error(transparent)]
    Core(#[from] bitguess_core::Error),
    /// A figure id this tool does not know.
    #[error("unknown figure id `{0}` (expected fig5, fig6/7-diagonal, or fig8/9-surfaces)")]
    UnknownFigure(String),
    /// Output I/O failures.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
