//! The classify subcommand: scalar invariants, the admissible ratio window,
//! the orbit family, and the equilibrium set for a strength triple, written
//! to report.json and echoed on stdout.

use std::fs;
use std::path::Path;

use serde::Serialize;
use trivortex::{equilibrium_manifold, t_region, CollinearEquilibria, OrbitKind, Vorticities};

use crate::config::Config;
use crate::output::{kind_label, write_file};
use crate::CliError;

#[derive(Serialize)]
struct Report {
    vorticities: [f64; 3],
    total: f64,
    virial: f64,
    /// Ratio scalars in canonical labeling (strongest opposite-signed
    /// strength moved last); absent when all strengths share a sign.
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<f64>,
    kind: &'static str,
    /// Admissible window [p_lo, p_hi] of the zero second-moment ratio line;
    /// infinite endpoints serialize as null.
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degenerate: Option<bool>,
    equilibria: EquilibriaReport,
}

#[derive(Serialize)]
struct EquilibriaReport {
    equilateral: bool,
    collinear: CollinearReport,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum CollinearReport {
    None,
    BoundaryRays { p_lo: f64, p_hi: f64 },
    DegenerateLine { p: f64 },
}

pub fn run(config: &Config, out: &Path) -> Result<(), CliError> {
    let g = config.vorticities()?;
    let report = build_report(&g);
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    fs::create_dir_all(out)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out.display())))?;
    write_file(&out.join("report.json"), &text)?;
    print!("{text}");
    Ok(())
}

fn build_report(g: &Vorticities) -> Report {
    let manifold = equilibrium_manifold(g);
    let collinear = match manifold.collinear {
        CollinearEquilibria::None => CollinearReport::None,
        CollinearEquilibria::BoundaryRays { p_lo, p_hi } => {
            CollinearReport::BoundaryRays { p_lo, p_hi }
        }
        CollinearEquilibria::DegenerateLine { p } => CollinearReport::DegenerateLine { p },
    };
    let equilibria = EquilibriaReport { equilateral: manifold.equilateral, collinear };

    let Ok((gc, _)) = g.canonicalized() else {
        return Report {
            vorticities: g.as_array(),
            total: g.total(),
            virial: g.virial(),
            m: None,
            n: None,
            beta: None,
            gamma: None,
            kind: "no_mixed_signs",
            p: None,
            degenerate: None,
            equilibria,
        };
    };
    let region = t_region(g).expect("mixed signs imply a canonical form");
    let kind = match manifold.collinear {
        CollinearEquilibria::BoundaryRays { .. } => OrbitKind::SelfSimilarFamily,
        CollinearEquilibria::DegenerateLine { .. } => OrbitKind::EquilibriumLine,
        CollinearEquilibria::None if !region.exists => OrbitKind::Empty,
        CollinearEquilibria::None if gc.gamma() > 0.0 => OrbitKind::BoundedCurve,
        CollinearEquilibria::None => OrbitKind::UnboundedCurve,
    };
    Report {
        vorticities: g.as_array(),
        total: g.total(),
        virial: g.virial(),
        m: Some(gc.m()),
        n: Some(gc.n()),
        beta: Some(gc.beta()),
        gamma: Some(gc.gamma()),
        kind: kind_label(kind),
        p: region.exists.then_some([region.p_lo, region.p_hi]),
        degenerate: region.exists.then_some(region.degenerate),
        equilibria,
    }
}
