//! Table rendering: fixed headers, floats at 12 significant digits,
//! deterministic bytes.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::figures::SurfaceRow;
use crate::runner::{AnalyticRow, GridCellResult};

/// Header of simulated-cell tables.
pub const SIMULATION_HEADER: &str =
    "mag0,mag1,quality,reasoner,n_games,xi_mean,xi_stderr,xi_analytic";
/// Header of closed-form tables.
pub const ANALYTIC_HEADER: &str = "mag0,mag1,quality,reasoner,xi_analytic";
/// Header of per-strategy surface tables.
pub const SURFACE_HEADER: &str = "alpha0,alpha1,tau,reasoner,xi_analytic";

/// Format a float with 12 significant digits: plain decimal for moderate
/// exponents (trailing zeros trimmed), scientific notation otherwise.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        let text = format!("{x:.decimals$}");
        if text.contains('.') {
            text.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            text
        }
    } else {
        format!("{x:.11e}")
    }
}

/// Render simulated cells under the fixed 8-column header.
pub fn render_cells(rows: &[GridCellResult]) -> String {
    let mut out = String::from(SIMULATION_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            sig12(row.mag0),
            sig12(row.mag1),
            row.quality.label(),
            row.reasoner.label(),
            row.n_games,
            sig12(row.xi_mean),
            sig12(row.xi_stderr),
            sig12(row.xi_analytic),
        ));
    }
    out
}

/// Render a closed-form table.
pub fn render_analytic(rows: &[AnalyticRow]) -> String {
    let mut out = String::from(ANALYTIC_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            sig12(row.mag0),
            sig12(row.mag1),
            row.quality.label(),
            row.reasoner.label(),
            sig12(row.xi_analytic),
        ));
    }
    out
}

/// Render a per-strategy surface table.
pub fn render_surface(rows: &[SurfaceRow]) -> String {
    let mut out = String::from(SURFACE_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            sig12(row.alpha0),
            sig12(row.alpha1),
            row.tau,
            row.reasoner.label(),
            sig12(row.xi_analytic),
        ));
    }
    out
}

/// Write to the given path, or stdout when none is given.
pub fn write_output(path: Option<&Path>, contents: &str) -> io::Result<()> {
    match path {
        Some(path) => fs::write(path, contents),
        None => io::stdout().write_all(contents.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bitguess_core::{HintQuality, Reasoner};

    #[test]
    fn sig12_shapes() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(0.05), "0.05");
        assert_eq!(sig12(0.55), "0.55");
        assert_eq!(sig12(-0.48), "-0.48");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(0.1234567890123456), "0.123456789012");
        assert_eq!(sig12(123456.7890123456), "123456.789012");
        assert_eq!(sig12(3.2e-17), "3.20000000000e-17");
        assert_eq!(sig12(1e15), "1.00000000000e15");
    }

    #[test]
    fn cell_rendering_is_stable() {
        let rows = vec![GridCellResult {
            mag0: 0.05,
            mag1: 0.45,
            reasoner: Reasoner::Quantum,
            quality: HintQuality::WellQuantified,
            n_games: 10_000,
            xi_mean: 0.5512,
            xi_stderr: 0.0075,
            xi_analytic: 0.55,
        }];
        let text = render_cells(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(SIMULATION_HEADER));
        assert_eq!(
            lines.next(),
            Some("0.05,0.45,well,quantum,10000,0.5512,0.0075,0.55")
        );
        assert_eq!(lines.next(), None);
        assert!(text.ends_with('\n'));
    }
}
