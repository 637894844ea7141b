//! Monte Carlo execution: per-cell seeded streams, the game loop, and
//! deterministic row assembly.

use bitguess_core::{
    random_alice_strategy, sample_answer_classical, sample_answer_quantum, score_round, Bit,
    HintQuality, Reasoner,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::ExperimentConfig;
use crate::Error;

/// One grid cell's work order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellConfig {
    /// |α₀| handed to the hint.
    pub mag0: f64,
    /// |α₁| handed to the hint.
    pub mag1: f64,
    /// Machinery Bob runs.
    pub reasoner: Reasoner,
    /// Hint quality.
    pub quality: HintQuality,
    /// Games to play.
    pub n_games: u64,
}

/// One grid cell's outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCellResult {
    /// |α₀| of the cell.
    pub mag0: f64,
    /// |α₁| of the cell.
    pub mag1: f64,
    /// Machinery the cell ran.
    pub reasoner: Reasoner,
    /// Hint quality the cell ran.
    pub quality: HintQuality,
    /// Games played.
    pub n_games: u64,
    /// Sample mean of Bob's round score.
    pub xi_mean: f64,
    /// Standard error of the mean, from the sample variance.
    pub xi_stderr: f64,
    /// Closed-form expectation for the same cell.
    pub xi_analytic: f64,
}

impl GridCellResult {
    /// Whether the sample mean sits within `k` standard errors of the
    /// closed form.
    pub fn within_standard_errors(&self, k: f64) -> bool {
        (self.xi_mean - self.xi_analytic).abs() <= k * self.xi_stderr
    }
}

/// One row of a closed-form table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticRow {
    /// |α₀| of the cell.
    pub mag0: f64,
    /// |α₁| of the cell.
    pub mag1: f64,
    /// Machinery.
    pub reasoner: Reasoner,
    /// Hint quality.
    pub quality: HintQuality,
    /// Closed-form expectation.
    pub xi_analytic: f64,
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-cell seed: splitmix64 folds the cell coordinates (magnitude bit
/// patterns, machinery, quality) into the master seed, so cells can run in
/// any order or in parallel without disturbing each other's stream.
pub fn derive_cell_seed(master: u64, cell: &CellConfig) -> u64 {
    let mut seed = splitmix64(master);
    for word in [
        cell.mag0.to_bits(),
        cell.mag1.to_bits(),
        cell.reasoner as u64,
        cell.quality as u64,
    ] {
        seed = splitmix64(seed ^ word);
    }
    seed
}

/// Play one cell's games on the given stream.
///
/// Every game draws a fresh strategy for Alice, orients the bias per the
/// cell's hint quality, samples Bob's two answers from the chosen
/// machinery, and books the round through the exact ledger. The ledger is
/// checked to be zero-sum before the aggregates are returned.
pub fn run_cell<R: Rng + ?Sized>(cell: &CellConfig, rng: &mut R) -> Result<GridCellResult, Error> {
    let analytic =
        bitguess_core::total_payoff(cell.reasoner, cell.mag0, cell.mag1, cell.quality)?;

    let mut bob_halves: i64 = 0;
    let mut alice_halves: i64 = 0;
    let mut sum_sq: i64 = 0;
    for _ in 0..cell.n_games {
        let strategy = random_alice_strategy(rng);
        let bias = cell.quality.bias_for(strategy, cell.mag0, cell.mag1)?;
        let mut sample = |x: Bit, rng: &mut R| match cell.reasoner {
            Reasoner::Classical => sample_answer_classical(&bias, x, rng),
            Reasoner::Quantum => sample_answer_quantum(&bias, x, rng),
        };
        let answers = (sample(Bit::Zero, rng), sample(Bit::One, rng));
        let record = score_round(strategy, answers);
        bob_halves += record.xi_bob.halves();
        alice_halves += record.xi_alice.halves();
        let units = record.xi_bob.halves() / 2;
        sum_sq += units * units;
    }
    assert_eq!(bob_halves + alice_halves, 0, "ledger lost the zero-sum");

    let n = cell.n_games as f64;
    let xi_mean = bob_halves as f64 / (2.0 * n);
    let xi_stderr = if cell.n_games > 1 {
        let variance = ((sum_sq as f64 - n * xi_mean * xi_mean) / (n - 1.0)).max(0.0);
        (variance / n).sqrt()
    } else {
        0.0
    };

    Ok(GridCellResult {
        mag0: cell.mag0,
        mag1: cell.mag1,
        reasoner: cell.reasoner,
        quality: cell.quality,
        n_games: cell.n_games,
        xi_mean,
        xi_stderr,
        xi_analytic: analytic.xi_total,
    })
}

/// Run a batch of cells, each on its own derived stream.
pub fn run_cells(master_seed: u64, cells: &[CellConfig]) -> Result<Vec<GridCellResult>, Error> {
    cells
        .iter()
        .map(|cell| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_cell_seed(master_seed, cell));
            run_cell(cell, &mut rng)
        })
        .collect()
}

/// Execute the configured product grid. Rows come back sorted by
/// (mag0, mag1, reasoner, quality).
pub fn run_grid(config: &ExperimentConfig) -> Result<Vec<GridCellResult>, Error> {
    config.validate()?;
    run_cells(config.seed, &grid_cells(config))
}

/// The work orders behind [`run_grid`], in row order.
pub fn grid_cells(config: &ExperimentConfig) -> Vec<CellConfig> {
    let mut cells = Vec::new();
    for (mag0, mag1) in config.grid() {
        for &reasoner in &config.reasoners {
            for &quality in &config.qualities {
                cells.push(CellConfig {
                    mag0,
                    mag1,
                    reasoner,
                    quality,
                    n_games: config.n_games,
                });
            }
        }
    }
    cells
}

/// Closed-form table over the configured grid, in the same row order as
/// [`run_grid`].
pub fn analytic_table(config: &ExperimentConfig) -> Result<Vec<AnalyticRow>, Error> {
    config.validate()?;
    let mut rows = Vec::new();
    for (mag0, mag1) in config.grid() {
        for &reasoner in &config.reasoners {
            for &quality in &config.qualities {
                let summary = bitguess_core::total_payoff(reasoner, mag0, mag1, quality)?;
                rows.push(AnalyticRow {
                    mag0,
                    mag1,
                    reasoner,
                    quality,
                    xi_analytic: summary.xi_total,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(reasoner: Reasoner, quality: HintQuality, n_games: u64) -> CellConfig {
        CellConfig { mag0: 0.3, mag1: 0.3, reasoner, quality, n_games }
    }

    #[test]
    fn derived_seeds_separate_cells() {
        let a = cell(Reasoner::Classical, HintQuality::WellQuantified, 100);
        let b = cell(Reasoner::Quantum, HintQuality::WellQuantified, 100);
        let c = CellConfig { mag0: 0.05, ..a };
        assert_ne!(derive_cell_seed(1, &a), derive_cell_seed(1, &b));
        assert_ne!(derive_cell_seed(1, &a), derive_cell_seed(1, &c));
        assert_ne!(derive_cell_seed(1, &a), derive_cell_seed(2, &a));
        assert_eq!(derive_cell_seed(1, &a), derive_cell_seed(1, &a));
    }

    #[test]
    fn run_cell_is_reproducible_and_tracks_the_closed_form() {
        let work = cell(Reasoner::Quantum, HintQuality::WellQuantified, 20_000);
        let seed = derive_cell_seed(7, &work);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let first = run_cell(&work, &mut rng).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let second = run_cell(&work, &mut rng).unwrap();
        assert_eq!(first, second);
        assert!(first.within_standard_errors(5.0), "{first:?}");
        assert!(first.xi_mean.abs() <= 1.0);
        assert!(first.xi_stderr > 0.0);
    }

    #[test]
    fn unbiased_cells_hover_at_zero() {
        for reasoner in Reasoner::ALL {
            let work = cell(reasoner, HintQuality::Unbiased, 10_000);
            let mut rng = ChaCha8Rng::seed_from_u64(derive_cell_seed(3, &work));
            let result = run_cell(&work, &mut rng).unwrap();
            assert_eq!(result.xi_analytic, 0.0);
            assert!(result.xi_mean.abs() <= 0.05, "{result:?}");
        }
    }

    #[test]
    fn grid_rows_are_sorted_and_complete() {
        let config = ExperimentConfig {
            n_games: 10,
            qualities: vec![HintQuality::WellQuantified, HintQuality::IllQuantified],
            ..Default::default()
        };
        let cells = grid_cells(&config);
        assert_eq!(cells.len(), 81 * 2 * 2);
        let keys: Vec<_> = cells
            .iter()
            .map(|c| {
                (
                    (c.mag0 * 1e6) as i64,
                    (c.mag1 * 1e6) as i64,
                    c.reasoner,
                    c.quality,
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn analytic_table_matches_run_grid_references() {
        let config = ExperimentConfig { n_games: 1, grid_step: 0.15, ..Default::default() };
        let table = analytic_table(&config).unwrap();
        let rows = run_grid(&config).unwrap();
        assert_eq!(table.len(), rows.len());
        for (a, r) in table.iter().zip(&rows) {
            assert_eq!(a.xi_analytic, r.xi_analytic);
            assert_eq!((a.mag0, a.mag1), (r.mag0, r.mag1));
        }
    }
}
