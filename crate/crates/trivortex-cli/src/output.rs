//! Shared output helpers: float formatting, CSV assembly, and the chart
//! coordinates reported alongside every trajectory.

use std::fs;
use std::path::Path;

use trivortex::{CollapseDirection, HaltReason, OrbitKind, Orientation};

use crate::CliError;

/// Fixed-width scientific notation keeps reruns byte-identical and roundtrips
/// f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

pub fn csv(header: &str, rows: &[Vec<String>]) -> String {
    let mut text = String::from(header);
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    text
}

/// Chart coordinates of an admissible shape, computed directly from the
/// squared sides so that equilateral and collinear inputs need no special
/// casing (theta defaults to 0 at the equilateral point).
pub fn chart_coords(b: [f64; 3], orientation: Orientation) -> (f64, f64, f64) {
    let lambda = b[0] + b[1] + b[2];
    let res =
        2.0 * (b[0] * b[1] + b[1] * b[2] + b[2] * b[0]) - (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    let sign = match orientation {
        Orientation::Positive => 1.0,
        Orientation::Negative => -1.0,
        Orientation::Collinear => 0.0,
    };
    let alpha = sign * (3.0 * res.max(0.0)).sqrt() / lambda;
    let mut theta = (3f64.sqrt() * (b[1] - b[0])).atan2(lambda - 3.0 * b[2]);
    if theta < 0.0 {
        theta += std::f64::consts::TAU;
    }
    (alpha, lambda, theta)
}

pub fn orientation_sign(orientation: Orientation) -> i8 {
    match orientation {
        Orientation::Positive => 1,
        Orientation::Negative => -1,
        Orientation::Collinear => 0,
    }
}

pub fn kind_label(kind: OrbitKind) -> &'static str {
    match kind {
        OrbitKind::SelfSimilarFamily => "self_similar_family",
        OrbitKind::BoundedCurve => "bounded_curve",
        OrbitKind::UnboundedCurve => "unbounded_curve",
        OrbitKind::EquilibriumLine => "equilibrium_line",
        OrbitKind::Empty => "empty",
    }
}

pub fn direction_label(direction: CollapseDirection) -> &'static str {
    match direction {
        CollapseDirection::Collapse => "collapse",
        CollapseDirection::Ejection => "ejection",
        CollapseDirection::RelativeEquilibrium => "relative_equilibrium",
    }
}

pub fn halt_label(reason: HaltReason) -> &'static str {
    match reason {
        HaltReason::HorizonReached => "horizon_reached",
        HaltReason::CollisionApproach => "collision_approach",
        HaltReason::BoundaryApproach => "boundary_approach",
        HaltReason::BinaryCollisionProximity => "binary_collision_proximity",
        HaltReason::EquilateralApproach => "equilateral_approach",
        HaltReason::StepFailure => "step_failure",
    }
}
