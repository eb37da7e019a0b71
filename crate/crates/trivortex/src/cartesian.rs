//! Point-vortex dynamics in the plane, positions as complex numbers. The
//! field and integrator take any number of vortices; the three-vortex
//! machinery elsewhere builds on the same loop.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::VortexError;
use crate::invariants::invariants_general;
use crate::ode::{integrate_raw, HaltReason, IntegratorConfig, Sample, Trajectory};
use crate::state::CartesianState;

fn check_compatible(g: &[f64], state: &CartesianState) -> Result<(), VortexError> {
    if g.len() != state.len() {
        return Err(VortexError::InvalidConfig("one strength per vortex is required"));
    }
    if g.iter().any(|v| !v.is_finite()) {
        return Err(VortexError::NonFinite);
    }
    Ok(())
}

/// Velocity of every vortex. Each pair contributes antisymmetrically, so the
/// linear impulse is conserved to rounding even before integration.
///
/// A zero strength is allowed here: such a vortex is a passive tracer.
pub fn cartesian_field(g: &[f64], state: &CartesianState) -> Result<Vec<Complex64>, VortexError> {
    check_compatible(g, state)?;
    let z = state.positions();
    let n = z.len();
    let mut v = alloc::vec![Complex64::new(0.0, 0.0); n];
    for a in 0..n {
        for b in (a + 1)..n {
            let dz = z[a] - z[b];
            let d2 = dz.norm_sqr();
            if d2 == 0.0 {
                return Err(VortexError::Coincident { i: a, j: b });
            }
            let w = Complex64::new(0.0, 1.0 / (core::f64::consts::TAU)) * dz / d2;
            v[a] += g[b] * w;
            v[b] -= g[a] * w;
        }
    }
    Ok(v)
}

/// Biggest deviation of each conserved quantity from its initial value over
/// a trajectory: energy, the second moment combination, and the magnitude of
/// the linear impulse displacement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftReport {
    pub energy: f64,
    pub m: f64,
    pub impulse: f64,
}

/// Scan a trajectory for invariant drift relative to its first sample.
pub fn invariant_drift(
    g: &[f64],
    traj: &Trajectory<CartesianState>,
) -> Result<DriftReport, VortexError> {
    let first = traj.samples.first().ok_or(VortexError::InvalidConfig("empty trajectory"))?;
    let base = invariants_general(g, &first.state)?;
    let mut report = DriftReport { energy: 0.0, m: 0.0, impulse: 0.0 };
    for s in &traj.samples {
        let inv = invariants_general(g, &s.state)?;
        report.energy = report.energy.max((inv.energy - base.energy).abs());
        report.m = report.m.max((inv.m - base.m).abs());
        report.impulse = report.impulse.max((inv.impulse - base.impulse).norm());
    }
    Ok(report)
}

fn flatten(state: &CartesianState) -> Vec<f64> {
    state.positions().iter().flat_map(|z| [z.re, z.im]).collect()
}

fn unflatten(y: &[f64]) -> CartesianState {
    let z: Vec<Complex64> = y.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect();
    CartesianState::from_raw(z)
}

/// Integrate vortex positions from t = 0 to the horizon.
///
/// Halts with [`HaltReason::CollisionApproach`] when the minimum pairwise
/// distance drops below the configured guard (by default a millionth of the
/// initial size scale).
pub fn integrate_cartesian(
    g: &[f64],
    state0: &CartesianState,
    cfg: &IntegratorConfig,
) -> Result<Trajectory<CartesianState>, VortexError> {
    integrate_cartesian_with_events(g, state0, cfg, &[])
}

/// Same as [`integrate_cartesian`], landing exactly on each requested time
/// inside the horizon so trajectories from different formulations can be
/// compared sample by sample.
pub fn integrate_cartesian_with_events(
    g: &[f64],
    state0: &CartesianState,
    cfg: &IntegratorConfig,
    events: &[f64],
) -> Result<Trajectory<CartesianState>, VortexError> {
    cfg.validate()?;
    check_compatible(g, state0)?;
    // Fail now if the initial point is already singular.
    cartesian_field(g, state0)?;

    let z0 = state0.positions();
    let n = z0.len();
    let lambda0: f64 = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .map(|(a, b)| (z0[a] - z0[b]).norm_sqr())
        .sum();
    let guard = cfg.halt_min_distance.unwrap_or(1e-6 * lambda0.sqrt());
    let guard_sq = guard * guard;

    let g = g.to_vec();
    let gf = g.clone();
    let field = move |y: &[f64], dy: &mut [f64]| -> bool {
        let m = y.len() / 2;
        dy[..2 * m].fill(0.0);
        for a in 0..m {
            let (xa, ya) = (y[2 * a], y[2 * a + 1]);
            for b in (a + 1)..m {
                let dx = xa - y[2 * b];
                let dyv = ya - y[2 * b + 1];
                let d2 = dx * dx + dyv * dyv;
                if !(d2 > 0.0) || !d2.is_finite() {
                    return false;
                }
                // i * dz / (2 pi d^2), accumulated antisymmetrically.
                let wx = -dyv / (core::f64::consts::TAU * d2);
                let wy = dx / (core::f64::consts::TAU * d2);
                dy[2 * a] += gf[b] * wx;
                dy[2 * a + 1] += gf[b] * wy;
                dy[2 * b] -= gf[a] * wx;
                dy[2 * b + 1] -= gf[a] * wy;
            }
        }
        true
    };

    let halt = move |_t: f64, y: &[f64]| -> Option<HaltReason> {
        if guard_sq == 0.0 {
            return None;
        }
        let m = y.len() / 2;
        for a in 0..m {
            for b in (a + 1)..m {
                let dx = y[2 * a] - y[2 * b];
                let dyv = y[2 * a + 1] - y[2 * b + 1];
                if dx * dx + dyv * dyv < guard_sq {
                    return Some(HaltReason::CollisionApproach);
                }
            }
        }
        None
    };

    let (raw, halt_reason) =
        integrate_raw(&flatten(state0), cfg, events, field, halt, |_, _| f64::INFINITY);
    let samples = raw.into_iter().map(|(t, y)| Sample { t, state: unflatten(&y) }).collect();
    Ok(Trajectory { samples, halt_reason })
}
