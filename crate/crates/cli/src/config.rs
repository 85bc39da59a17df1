//! Settings from flags and an optional TOML file; flags win.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::CliError;
use crate::spec::WeightSpec;

/// Every key a config file may set. Keys are the flag names without the
/// leading dashes, e.g. `r-grid = [0.9, 0.99]`.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub weight: Option<WeightSpec>,
    pub r_grid: Option<Vec<f64>>,
    pub puncture_r_grid: Option<Vec<f64>>,
    pub delta: Option<f64>,
    pub epsilon: Option<f64>,
    pub split_a: Option<f64>,
    pub mesh: Option<f64>,
    pub margin: Option<f64>,
    pub puncture_mesh: Option<f64>,
    pub puncture_margin: Option<f64>,
    pub random_centers: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub nodes: Option<usize>,
    pub tol: Option<f64>,
    pub numeric_tol: Option<f64>,
    pub degree: Option<usize>,
    pub grid_points: Option<usize>,
    pub max_modulus: Option<f64>,
    pub lattice: Option<String>,
    pub count: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text, path)
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| {
            let (line, column) = e.span().map(|s| line_col(text, s.start)).unwrap_or((0, 0));
            CliError::Malformed { path: path.to_path_buf(), line, column, message: e.message().to_string() }
        })
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

/// Validate a border radius grid: every value in (1/2, 1).
pub fn check_border_grid(grid: &[f64]) -> Result<(), CliError> {
    if grid.is_empty() {
        return Err(CliError::usage("the border r grid is empty"));
    }
    for r in grid {
        if !(*r > 0.5 && *r < 1.0) {
            return Err(CliError::usage(format!("border radius {r} is outside (1/2, 1)")));
        }
    }
    Ok(())
}

/// Validate a puncture radius grid: every value finite and above 1.
pub fn check_puncture_grid(grid: &[f64]) -> Result<(), CliError> {
    if grid.is_empty() {
        return Err(CliError::usage("the puncture r grid is empty"));
    }
    for r in grid {
        if !(*r > 1.0 && r.is_finite()) {
            return Err(CliError::usage(format!("puncture radius {r} must exceed 1")));
        }
    }
    Ok(())
}

pub fn check_delta(delta: f64) -> Result<(), CliError> {
    if delta > 0.0 && delta < 0.5 {
        Ok(())
    } else {
        Err(CliError::usage(format!("delta = {delta} is outside (0, 0.5)")))
    }
}
