//! Experiment configuration: defaults, validation, the magnitude grids, and
//! the `key = value` file format accepted alongside command-line flags.

use std::fs;
use std::path::{Path, PathBuf};

use bitguess_core::{HintQuality, Reasoner};
use thiserror::Error;

/// Games per grid cell unless overridden.
pub const DEFAULT_N_GAMES: u64 = 10_000;
/// Magnitude grid spacing unless overridden.
pub const DEFAULT_GRID_STEP: f64 = 0.05;
/// Master seed unless overridden.
pub const DEFAULT_SEED: u64 = 1;
/// Largest magnitude placed on a grid axis.
pub const GRID_MAX: f64 = 0.45;

/// Configuration problems, reported before any game is played.
#[derive(Debug, Error)]
pub enum ConfigError {
    /// The config file could not be read.
    #[error("cannot read config file {path}: {source}")]
    Io {
        /// Offending path.
        path: PathBuf,
        /// Underlying error.
        #[source]
        source: std::io::Error,
    },
    /// A line was not of the form `key = value`.
    #[error("{path}:{line}: expected `key = value`, got `{text}`")]
    Malformed {
        /// Offending path.
        path: PathBuf,
        /// 1-based line number.
        line: usize,
        /// The offending line.
        text: String,
    },
    /// A key this tool does not know.
    #[error("unknown config key `{key}`")]
    UnknownKey {
        /// The offending key.
        key: String,
    },
    /// A value that does not parse or is out of range.
    #[error("invalid value `{value}` for `{key}`: {reason}")]
    InvalidValue {
        /// The key being set.
        key: String,
        /// The offending value.
        value: String,
        /// Why it was rejected.
        reason: String,
    },
}

/// A fully resolved experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Games per grid cell.
    pub n_games: u64,
    /// Master seed; per-cell streams are derived from it.
    pub seed: u64,
    /// Magnitude grid spacing (also the mesh spacing of analytic surfaces).
    pub grid_step: f64,
    /// Machineries to run, in table order.
    pub reasoners: Vec<Reasoner>,
    /// Hint qualities to run, in table order.
    pub qualities: Vec<HintQuality>,
    /// Output file; stdout when absent.
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n_games: DEFAULT_N_GAMES,
            seed: DEFAULT_SEED,
            grid_step: DEFAULT_GRID_STEP,
            reasoners: Reasoner::ALL.to_vec(),
            qualities: vec![HintQuality::WellQuantified],
            out: None,
        }
    }
}

impl ExperimentConfig {
    /// Check every invariant the runner depends on.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_games < 1 {
            return Err(invalid("n_games", &self.n_games.to_string(), "must be at least 1"));
        }
        if !(self.grid_step > 0.0 && self.grid_step <= 0.5) {
            return Err(invalid(
                "grid_step",
                &self.grid_step.to_string(),
                "must lie in (0, 0.5]",
            ));
        }
        if self.reasoners.is_empty() {
            return Err(invalid("reasoner", "", "at least one machinery required"));
        }
        if self.qualities.is_empty() {
            return Err(invalid("quality", "", "at least one hint quality required"));
        }
        Ok(())
    }

    /// Magnitudes on one grid axis: step, 2·step, … up to 0.45.
    pub fn magnitudes(&self) -> Vec<f64> {
        let mut values = Vec::new();
        let mut k = 1u32;
        loop {
            let m = f64::from(k) * self.grid_step;
            if m > GRID_MAX + 1e-9 {
                break;
            }
            values.push(m);
            k += 1;
        }
        values
    }

    /// The full (mag0, mag1) product grid, sorted.
    pub fn grid(&self) -> Vec<(f64, f64)> {
        let axis = self.magnitudes();
        let mut grid = Vec::with_capacity(axis.len() * axis.len());
        for &m0 in &axis {
            for &m1 in &axis {
                grid.push((m0, m1));
            }
        }
        grid
    }

    /// The diagonal mag0 = mag1 slice of the grid.
    pub fn diagonal(&self) -> Vec<(f64, f64)> {
        self.magnitudes().into_iter().map(|m| (m, m)).collect()
    }
}

/// Settings from one source (file or flags); `None` means "not given".
/// Later sources are laid on top of earlier ones.
#[derive(Debug, Clone, Default)]
pub struct ConfigOverlay {
    /// Games per cell, if given.
    pub n_games: Option<u64>,
    /// Master seed, if given.
    pub seed: Option<u64>,
    /// Grid spacing, if given.
    pub grid_step: Option<f64>,
    /// Machineries, if given.
    pub reasoners: Option<Vec<Reasoner>>,
    /// Hint qualities, if given.
    pub qualities: Option<Vec<HintQuality>>,
    /// Output path, if given.
    pub out: Option<PathBuf>,
}

impl ConfigOverlay {
    /// Parse a plain-text config file. Blank lines and `#` comments are
    /// skipped; keys may use `-` or `_` interchangeably.
    pub fn from_file(path: &Path) -> Result<ConfigOverlay, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut overlay = ConfigOverlay::default();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Malformed {
                path: path.to_path_buf(),
                line: index + 1,
                text: raw.to_string(),
            })?;
            overlay.set(key.trim(), value.trim())?;
        }
        Ok(overlay)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key.replace('-', "_").as_str() {
            "n_games" => self.n_games = Some(parse_number(key, value)?),
            "seed" => self.seed = Some(parse_number(key, value)?),
            "grid_step" => self.grid_step = Some(parse_number(key, value)?),
            "reasoner" => self.reasoners = Some(parse_reasoners(value)?),
            "quality" => self.qualities = Some(parse_qualities(value)?),
            "out" => self.out = Some(PathBuf::from(value)),
            _ => return Err(ConfigError::UnknownKey { key: key.to_string() }),
        }
        Ok(())
    }

    /// Apply `other` on top of `self`: values given in `other` win.
    pub fn overridden_by(self, other: ConfigOverlay) -> ConfigOverlay {
        ConfigOverlay {
            n_games: other.n_games.or(self.n_games),
            seed: other.seed.or(self.seed),
            grid_step: other.grid_step.or(self.grid_step),
            reasoners: other.reasoners.or(self.reasoners),
            qualities: other.qualities.or(self.qualities),
            out: other.out.or(self.out),
        }
    }

    /// Fill the gaps with defaults and validate.
    pub fn into_config(self) -> Result<ExperimentConfig, ConfigError> {
        let defaults = ExperimentConfig::default();
        let config = ExperimentConfig {
            n_games: self.n_games.unwrap_or(defaults.n_games),
            seed: self.seed.unwrap_or(defaults.seed),
            grid_step: self.grid_step.unwrap_or(defaults.grid_step),
            reasoners: self.reasoners.unwrap_or(defaults.reasoners),
            qualities: self.qualities.unwrap_or(defaults.qualities),
            out: self.out.or(defaults.out),
        };
        config.validate()?;
        Ok(config)
    }
}

fn parse_number<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|err: T::Err| invalid(key, value, &err.to_string()))
}

fn invalid(key: &str, value: &str, reason: &str) -> ConfigError {
    ConfigError::InvalidValue {
        key: key.to_string(),
        value: value.to_string(),
        reason: reason.to_string(),
    }
}

/// Parse a machinery list: `classical`, `quantum`, `both`, or a comma list.
/// Duplicates collapse and the result keeps table order.
pub fn parse_reasoners(text: &str) -> Result<Vec<Reasoner>, ConfigError> {
    let mut selected = [false; 2];
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "classical" => selected[0] = true,
            "quantum" => selected[1] = true,
            "both" | "all" => selected = [true, true],
            other => {
                return Err(invalid(
                    "reasoner",
                    other,
                    "expected classical, quantum, or both",
                ))
            }
        }
    }
    let list: Vec<Reasoner> = Reasoner::ALL
        .into_iter()
        .zip(selected)
        .filter_map(|(r, on)| on.then_some(r))
        .collect();
    if list.is_empty() {
        return Err(invalid("reasoner", text, "empty machinery list"));
    }
    Ok(list)
}

/// Parse a hint-quality list: `well`, `ill`, `unbiased`, `all`, or a comma
/// list. Duplicates collapse and the result keeps table order.
pub fn parse_qualities(text: &str) -> Result<Vec<HintQuality>, ConfigError> {
    let mut selected = [false; 3];
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "well" | "well-quantified" => selected[0] = true,
            "ill" | "ill-quantified" => selected[1] = true,
            "unbiased" | "none" => selected[2] = true,
            "all" => selected = [true, true, true],
            other => {
                return Err(invalid(
                    "quality",
                    other,
                    "expected well, ill, unbiased, or all",
                ))
            }
        }
    }
    let list: Vec<HintQuality> = HintQuality::ALL
        .into_iter()
        .zip(selected)
        .filter_map(|(q, on)| on.then_some(q))
        .collect();
    if list.is_empty() {
        return Err(invalid("quality", text, "empty quality list"));
    }
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_matches_the_protocol() {
        let config = ExperimentConfig::default();
        let axis = config.magnitudes();
        assert_eq!(axis.len(), 9);
        assert!((axis[0] - 0.05).abs() < 1e-12);
        assert!((axis[8] - 0.45).abs() < 1e-12);
        assert_eq!(config.grid().len(), 81);
        assert_eq!(config.diagonal().len(), 9);
    }

    #[test]
    fn coarse_grid_step() {
        let config = ExperimentConfig { grid_step: 0.1, ..Default::default() };
        let axis = config.magnitudes();
        assert_eq!(axis.len(), 4);
        assert!((axis[3] - 0.4).abs() < 1e-12);
    }

    #[test]
    fn list_parsers() {
        assert_eq!(parse_reasoners("both").unwrap(), Reasoner::ALL.to_vec());
        assert_eq!(
            parse_reasoners("quantum,classical,quantum").unwrap(),
            Reasoner::ALL.to_vec()
        );
        assert_eq!(parse_reasoners("quantum").unwrap(), vec![Reasoner::Quantum]);
        assert!(parse_reasoners("spooky").is_err());

        assert_eq!(parse_qualities("all").unwrap(), HintQuality::ALL.to_vec());
        assert_eq!(
            parse_qualities("unbiased,ill").unwrap(),
            vec![HintQuality::IllQuantified, HintQuality::Unbiased]
        );
        assert!(parse_qualities("great").is_err());
    }

    #[test]
    fn validation_rejects_bad_settings() {
        let mut config = ExperimentConfig { n_games: 0, ..Default::default() };
        assert!(config.validate().is_err());
        config.n_games = 1;
        config.grid_step = 0.0;
        assert!(config.validate().is_err());
        config.grid_step = 0.6;
        assert!(config.validate().is_err());
    }

    #[test]
    fn file_overlay_and_flag_override() {
        let dir = std::env::temp_dir().join("bitguess-config-test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        fs::write(
            &path,
            "# experiment\nn-games = 500\nseed = 9\nquality = well, ill\nout = table.csv\n",
        )
        .unwrap();

        let file = ConfigOverlay::from_file(&path).unwrap();
        let flags = ConfigOverlay { seed: Some(77), ..Default::default() };
        let config = file.overridden_by(flags).into_config().unwrap();
        assert_eq!(config.n_games, 500);
        assert_eq!(config.seed, 77);
        assert_eq!(
            config.qualities,
            vec![HintQuality::WellQuantified, HintQuality::IllQuantified]
        );
        assert_eq!(config.out, Some(PathBuf::from("table.csv")));
        assert_eq!(config.grid_step, DEFAULT_GRID_STEP);

        fs::write(&path, "games = 3\n").unwrap();
        assert!(matches!(
            ConfigOverlay::from_file(&path),
            Err(ConfigError::UnknownKey { .. })
        ));
        fs::write(&path, "n_games 3\n").unwrap();
        assert!(matches!(
            ConfigOverlay::from_file(&path),
            Err(ConfigError::Malformed { .. })
        ));
    }
}
