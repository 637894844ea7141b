//! Named dataset emitters matching the published result layouts: the
//! simulated score grid, its diagonal slice, and the per-strategy analytic
//! surfaces over the signed bias square.

use bitguess_core::{
    per_tau_score, per_tau_score_quantum_form, AliceStrategy, ClassicalAnswerDistribution,
    PhaseRule, PreferenceBias, Reasoner,
};

use crate::config::ExperimentConfig;
use crate::runner::{run_cells, CellConfig, GridCellResult};
use crate::Error;

/// The datasets this tool knows how to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// `fig5`: Monte Carlo means over the full magnitude grid, both
    /// machineries, truthful hints.
    Grid,
    /// `fig6/7-diagonal`: the same along the mag0 = mag1 diagonal.
    Diagonal,
    /// `fig8/9-surfaces`: per-strategy closed-form scores over the signed
    /// (α₀, α₁) square, both machineries.
    Surfaces,
}

impl FigureId {
    /// Parse an id; a few aliases are accepted.
    pub fn parse(text: &str) -> Result<FigureId, Error> {
        match text {
            "fig5" | "grid" => Ok(FigureId::Grid),
            "fig6/7-diagonal" | "fig6" | "fig7" | "diagonal" => Ok(FigureId::Diagonal),
            "fig8/9-surfaces" | "fig8" | "fig9" | "surfaces" => Ok(FigureId::Surfaces),
            other => Err(Error::UnknownFigure(other.to_string())),
        }
    }

    /// The canonical id string.
    pub fn canonical_id(self) -> &'static str {
        match self {
            FigureId::Grid => "fig5",
            FigureId::Diagonal => "fig6/7-diagonal",
            FigureId::Surfaces => "fig8/9-surfaces",
        }
    }
}

/// One mesh point of a per-strategy analytic surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceRow {
    /// Signed α₀.
    pub alpha0: f64,
    /// Signed α₁.
    pub alpha1: f64,
    /// Strategy family index, 1..=4.
    pub tau: u8,
    /// Machinery the surface belongs to.
    pub reasoner: Reasoner,
    /// Closed-form expected score at this point.
    pub xi_analytic: f64,
}

/// A figure's data, in its natural schema.
#[derive(Debug, Clone, PartialEq)]
pub enum FigureTable {
    /// Simulated cells (the 8-column schema).
    Cells(Vec<GridCellResult>),
    /// Analytic surface mesh points.
    Surface(Vec<SurfaceRow>),
}

/// Produce a figure's dataset.
///
/// The simulated figures fix their own protocol — truthful hints, both
/// machineries — and take the grid, games count, and seed from the config.
/// The surface figure meshes the signed bias square at the config's grid
/// step.
pub fn run_figure(id: FigureId, config: &ExperimentConfig) -> Result<FigureTable, Error> {
    config.validate()?;
    match id {
        FigureId::Grid => Ok(FigureTable::Cells(simulated(config, config.grid())?)),
        FigureId::Diagonal => Ok(FigureTable::Cells(simulated(config, config.diagonal())?)),
        FigureId::Surfaces => Ok(FigureTable::Surface(surfaces(config.grid_step))),
    }
}

fn simulated(
    config: &ExperimentConfig,
    grid: Vec<(f64, f64)>,
) -> Result<Vec<GridCellResult>, Error> {
    let mut cells = Vec::new();
    for (mag0, mag1) in grid {
        for reasoner in Reasoner::ALL {
            cells.push(CellConfig {
                mag0,
                mag1,
                reasoner,
                quality: bitguess_core::HintQuality::WellQuantified,
                n_games: config.n_games,
            });
        }
    }
    run_cells(config.seed, &cells)
}

fn surfaces(step: f64) -> Vec<SurfaceRow> {
    let half_steps = (0.5 / step + 1e-9).floor() as i32;
    let mut rows = Vec::new();
    for i in -half_steps..=half_steps {
        for j in -half_steps..=half_steps {
            let alpha0 = f64::from(i) * step;
            let alpha1 = f64::from(j) * step;
            let bias = PreferenceBias::new(alpha0, alpha1)
                .expect("mesh points stay inside the bias square");
            let delta = PhaseRule::from_bias(&bias).delta();
            let classical = ClassicalAnswerDistribution::evaluate(&bias);
            for strategy in AliceStrategy::ALL {
                rows.push(SurfaceRow {
                    alpha0,
                    alpha1,
                    tau: strategy.tau_index(),
                    reasoner: Reasoner::Classical,
                    xi_analytic: per_tau_score(strategy, &classical).xi_bar,
                });
                rows.push(SurfaceRow {
                    alpha0,
                    alpha1,
                    tau: strategy.tau_index(),
                    reasoner: Reasoner::Quantum,
                    xi_analytic: per_tau_score_quantum_form(strategy, &bias, delta).xi_bar,
                });
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse_and_reject() {
        assert_eq!(FigureId::parse("fig5").unwrap(), FigureId::Grid);
        assert_eq!(FigureId::parse("fig6/7-diagonal").unwrap(), FigureId::Diagonal);
        assert_eq!(FigureId::parse("fig7").unwrap(), FigureId::Diagonal);
        assert_eq!(FigureId::parse("fig8/9-surfaces").unwrap(), FigureId::Surfaces);
        assert!(matches!(FigureId::parse("fig99"), Err(Error::UnknownFigure(_))));
    }

    #[test]
    fn diagonal_contains_the_expected_points() {
        let config = ExperimentConfig { n_games: 200, ..Default::default() };
        let FigureTable::Cells(rows) = run_figure(FigureId::Diagonal, &config).unwrap() else {
            panic!("diagonal must be a cells table");
        };
        assert_eq!(rows.len(), 9 * 2);
        // At |α| = 0.25 the references are 0.375 and 0.75.
        let classical = rows
            .iter()
            .find(|r| (r.mag0 - 0.25).abs() < 1e-12 && r.reasoner == Reasoner::Classical)
            .unwrap();
        assert!((classical.xi_analytic - 0.375).abs() <= 1e-12);
        let quantum = rows
            .iter()
            .find(|r| (r.mag0 - 0.25).abs() < 1e-12 && r.reasoner == Reasoner::Quantum)
            .unwrap();
        assert!((quantum.xi_analytic - 0.75).abs() <= 1e-12);
    }

    #[test]
    fn surfaces_cover_the_signed_square() {
        let config = ExperimentConfig { grid_step: 0.25, ..Default::default() };
        let FigureTable::Surface(rows) = run_figure(FigureId::Surfaces, &config).unwrap() else {
            panic!("surfaces must be a surface table");
        };
        // 5×5 mesh × 4 strategies × 2 machineries.
        assert_eq!(rows.len(), 5 * 5 * 4 * 2);
        assert!(rows.iter().any(|r| r.alpha0 == -0.5 && r.alpha1 == 0.5));

        // The constant-0 rule's classical surface at (0.3, 0.3) is 0.48.
        let config = ExperimentConfig { grid_step: 0.05, ..Default::default() };
        let FigureTable::Surface(rows) = run_figure(FigureId::Surfaces, &config).unwrap() else {
            unreachable!()
        };
        let row = rows
            .iter()
            .find(|r| {
                (r.alpha0 - 0.3).abs() < 1e-9
                    && (r.alpha1 - 0.3).abs() < 1e-9
                    && r.tau == 1
                    && r.reasoner == Reasoner::Classical
            })
            .unwrap();
        assert!((row.xi_analytic - 0.48).abs() <= 1e-12);
    }
}
