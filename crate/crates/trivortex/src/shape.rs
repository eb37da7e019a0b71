//! Dynamics of the triangle shape alone: squared side lengths plus an
//! orientation sign. The squared sides close on themselves, so three vortices
//! reduce to a three-dimensional flow, at the price of a coordinate breakdown
//! wherever the triangle degenerates to a line.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::VortexError;
use crate::ode::{integrate_raw, HaltReason, IntegratorConfig, Sample, Trajectory};
use crate::state::{area, cone_residual, Orientation, ShapeState};
use crate::vorticity::Vorticities;

/// Halt when the normalized area coordinate drops below this; the orientation
/// sign is about to flip and the side-length chart cannot follow it.
const BOUNDARY_HALT: f64 = 1e-4;
/// Stages below this count as outside the chart. Half the halt threshold, so
/// a halting sample is always reachable before stages go invalid.
const BOUNDARY_INVALID: f64 = 5e-5;

/// Normalized area coordinate, unsigned: sqrt(3) * sqrt(residual) / lambda.
/// Equals 1 at an equilateral shape and 0 on the collinear boundary.
fn alpha_abs(b: [f64; 3]) -> f64 {
    let res = cone_residual(b).max(0.0);
    let lambda = b[0] + b[1] + b[2];
    3.0f64.sqrt() * res.sqrt() / lambda
}

/// Time derivative of the squared side lengths.
///
/// Fails on a collinear state: the sign of the area, and with it the sign of
/// every component, is not determined there.
pub fn shape_field(g: &Vorticities, state: &ShapeState) -> Result<[f64; 3], VortexError> {
    if state.eps() == Orientation::Collinear {
        return Err(VortexError::CollinearBoundary);
    }
    let a = area(state);
    let [b1, b2, b3] = state.b();
    let c = 2.0 * a / core::f64::consts::PI;
    Ok([
        g.g1() * c * (1.0 / b2 - 1.0 / b3),
        g.g2() * c * (1.0 / b3 - 1.0 / b1),
        g.g3() * c * (1.0 / b1 - 1.0 / b2),
    ])
}

/// Time derivative of the signed area. The signed area enters each side's
/// rate and the area gradient once each, with the signs cancelling, so this
/// is well defined on the collinear boundary too and never fails.
pub fn area_rate(g: &Vorticities, state: &ShapeState) -> f64 {
    let [b1, b2, b3] = state.b();
    let t1 = g.g1() * (1.0 / b2 - 1.0 / b3) * (-b1 + b2 + b3);
    let t2 = g.g2() * (1.0 / b3 - 1.0 / b1) * (b1 - b2 + b3);
    let t3 = g.g3() * (1.0 / b1 - 1.0 / b2) * (b1 + b2 - b3);
    (t1 + t2 + t3) / (8.0 * core::f64::consts::PI)
}

/// Integrate the squared side lengths from t = 0 to the horizon.
///
/// The orientation sign is carried along unchanged; when the trajectory
/// approaches the collinear boundary the run halts with
/// [`HaltReason::BoundaryApproach`] instead of guessing the continuation.
pub fn integrate_shape(
    g: &Vorticities,
    state0: &ShapeState,
    cfg: &IntegratorConfig,
) -> Result<Trajectory<ShapeState>, VortexError> {
    integrate_shape_with_events(g, state0, cfg, &[])
}

/// Same as [`integrate_shape`], landing exactly on each requested time.
pub fn integrate_shape_with_events(
    g: &Vorticities,
    state0: &ShapeState,
    cfg: &IntegratorConfig,
    events: &[f64],
) -> Result<Trajectory<ShapeState>, VortexError> {
    cfg.validate()?;
    if state0.eps() == Orientation::Collinear {
        return Err(VortexError::CollinearBoundary);
    }
    let eps = state0.eps();
    let sign = eps.sign();
    let gs = [g.g1(), g.g2(), g.g3()];

    let field = move |y: &[f64], dy: &mut [f64]| -> bool {
        let b = [y[0], y[1], y[2]];
        if b.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return false;
        }
        if alpha_abs(b) < BOUNDARY_INVALID {
            return false;
        }
        let a = sign * cone_residual(b).max(0.0).sqrt() / 4.0;
        let c = 2.0 * a / core::f64::consts::PI;
        dy[0] = gs[0] * c * (1.0 / b[1] - 1.0 / b[2]);
        dy[1] = gs[1] * c * (1.0 / b[2] - 1.0 / b[0]);
        dy[2] = gs[2] * c * (1.0 / b[0] - 1.0 / b[1]);
        true
    };

    let halt = move |_t: f64, y: &[f64]| -> Option<HaltReason> {
        (alpha_abs([y[0], y[1], y[2]]) < BOUNDARY_HALT).then_some(HaltReason::BoundaryApproach)
    };

    // The side-length field stays smooth in time across a collinear crossing,
    // so step control alone would hop straight over the boundary. Cap the
    // step so the normalized area can at most halve per step while it
    // shrinks; the halt above then always fires first.
    let g_for_cap = *g;
    let step_cap = move |_t: f64, y: &[f64]| -> f64 {
        let b = [y[0], y[1], y[2]];
        let lambda = b[0] + b[1] + b[2];
        let a_signed = sign * cone_residual(b).max(0.0).sqrt() / 4.0;
        let state = match ShapeState::new(b[0], b[1], b[2], eps) {
            Ok(s) => s,
            Err(_) => return f64::INFINITY,
        };
        let adot = area_rate(&g_for_cap, &state);
        let field_b = match shape_field(&g_for_cap, &state) {
            Ok(f) => f,
            Err(_) => return f64::INFINITY,
        };
        let lambda_dot = field_b[0] + field_b[1] + field_b[2];
        // alpha = (4 sqrt(3) / lambda) * A, signed.
        let alpha = 4.0 * 3.0f64.sqrt() * a_signed / lambda;
        let alpha_dot =
            4.0 * 3.0f64.sqrt() * (lambda * adot - a_signed * lambda_dot) / (lambda * lambda);
        if alpha * alpha_dot < 0.0 {
            0.5 * alpha.abs() / alpha_dot.abs()
        } else {
            f64::INFINITY
        }
    };

    let (raw, halt_reason) =
        integrate_raw(&[state0.b1(), state0.b2(), state0.b3()], cfg, events, field, halt, step_cap);
    let mut samples = alloc::vec::Vec::with_capacity(raw.len());
    for (t, y) in raw {
        // Accepted samples stay interior by construction; fall back to
        // re-resolving the orientation only if one sits inside the boundary
        // classification band.
        let state = ShapeState::new(y[0], y[1], y[2], eps)
            .or_else(|_| ShapeState::new(y[0], y[1], y[2], Orientation::Collinear))?;
        samples.push(Sample { t, state });
    }
    Ok(Trajectory { samples, halt_reason })
}
