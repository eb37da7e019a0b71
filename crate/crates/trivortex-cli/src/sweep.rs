//! The sweep subcommand: evaluate the ratio-window trichotomy on a grid of
//! the ratio scalars (m, n), realized through the strength family
//! (1, m/n, -m), and write one CSV record per grid point.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use trivortex::{t_region, Vorticities};

use crate::config::{Config, RangeSpec};
use crate::output::{csv, fmt_f64, write_file};
use crate::CliError;

const HEADER: &str = "m,n,beta,gamma,class,p_lo,p_hi";

pub fn run(config: &Config, out: &Path, jobs: Option<usize>) -> Result<(), CliError> {
    let section = config
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::Config("config needs a \"sweep\" section".into()))?;
    let ms = grid("sweep.m", &section.m)?;
    let ns = grid("sweep.n", &section.n)?;
    let points: Vec<(f64, f64)> =
        ms.iter().flat_map(|&m| ns.iter().map(move |&n| (m, n))).collect();

    let evaluate = || points.par_iter().map(|&(m, n)| row(m, n)).collect::<Vec<_>>();
    let rows = match jobs {
        Some(0) => return Err(CliError::Config("jobs must be at least 1".into())),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Runtime(format!("cannot build thread pool: {e}")))?
            .install(evaluate),
        None => evaluate(),
    };

    fs::create_dir_all(out)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out.display())))?;
    write_file(&out.join("sweep.csv"), &csv(HEADER, &rows))
}

/// Inclusive arithmetic grid; a stop below start yields no points.
fn grid(name: &str, spec: &RangeSpec) -> Result<Vec<f64>, CliError> {
    let (start, stop, step) = (spec.start.0, spec.stop.0, spec.step.0);
    if !(start > 0.0) || !start.is_finite() {
        return Err(CliError::Config(format!("{name}.start must be positive and finite")));
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(CliError::Config(format!("{name}.step must be positive and finite")));
    }
    if !stop.is_finite() {
        return Err(CliError::Config(format!("{name}.stop must be finite")));
    }
    let count = ((stop - start) / step + 1.0 + 1e-9).floor() as i64;
    Ok((0..count.max(0)).map(|i| start + i as f64 * step).collect())
}

fn row(m: f64, n: f64) -> Vec<String> {
    let g = Vorticities::new(1.0, m / n, -m).expect("positive grid scalars give valid strengths");
    let region = t_region(&g).expect("the grid family always mixes signs");
    let (gc, _) = g.canonicalized().expect("the grid family always mixes signs");
    let class = if !region.exists {
        "empty"
    } else if region.degenerate {
        "degenerate"
    } else {
        "window"
    };
    vec![
        fmt_f64(m),
        fmt_f64(n),
        fmt_f64(gc.beta()),
        fmt_f64(gc.gamma()),
        class.to_string(),
        fmt_f64(region.p_lo),
        fmt_f64(region.p_hi),
    ]
}
