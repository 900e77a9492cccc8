//! Scene files, query evaluation and figure data for the `elpga` command.

pub mod error;
pub mod eval;
pub mod figure;
pub mod json;
pub mod scene;

use std::path::{Path, PathBuf};

pub use error::{CliError, Result};
pub use figure::FigureKind;
pub use scene::Scene;

/// Loads a scene and evaluates its queries into a report.
pub fn eval_file(path: &Path, tol: f64) -> Result<serde_json::Value> {
    let scene = Scene::load(path, tol)?;
    eval::evaluate(&scene, tol)
}

/// Builds a figure and writes `<out>.svg` and `<out>.csv`, returning both
/// paths.
pub fn figure_file(path: &Path, kind: FigureKind, samples: usize, out: &Path, tol: f64) -> Result<(PathBuf, PathBuf)> {
    let scene = Scene::load(path, tol)?;
    let data = figure::build(&scene, kind, samples, tol)?;
    let svg = out.with_extension("svg");
    let csv = out.with_extension("csv");
    std::fs::write(&svg, data.to_svg())?;
    std::fs::write(&csv, data.to_csv())?;
    Ok((svg, csv))
}

pub fn check_tolerance(tol: f64) -> Result<f64> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(CliError::invalid(format!("tolerance must be a positive number, got {tol}")))
    }
}
