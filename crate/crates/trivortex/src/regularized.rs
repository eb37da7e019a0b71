//! Chart on shape space built from the normalized area, the total squared
//! size, and an angle around the equilateral axis. The flow in these
//! coordinates stays regular across collinear states, which is what the
//! side-length formulation cannot offer; the price is a coordinate
//! singularity at equilateral shapes and marked points where two vortices
//! sit together.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::VortexError;
use crate::ode::{integrate_raw, HaltReason, IntegratorConfig, Sample, Trajectory};
use crate::state::{area, Orientation, ShapeState};
use crate::vorticity::Vorticities;

const TAU: f64 = core::f64::consts::TAU;

/// Halt when the smallest squared side falls below this fraction of the
/// total squared size: the state is closing in on a marked binary-collision
/// point of the chart, which the true dynamics never reaches.
const COLLISION_HALT: f64 = 1e-9;
/// Halt when the shape is this close to equilateral, where the angle
/// coordinate degenerates.
const EQUILATERAL_HALT: f64 = 1e-9;
/// Stages beyond this are rejected outright; five times tighter than the
/// halts so a halting sample is always accepted first.
const INVALID_MARGIN: f64 = 2e-10;

fn wrap_angle(t: f64) -> f64 {
    let mut w = t % TAU;
    if w < 0.0 {
        w += TAU;
    }
    if w >= TAU {
        w = 0.0;
    }
    w
}

/// Shape-space point in regularized coordinates: `alpha` in (-1, 1) is the
/// normalized signed area, `lambda` > 0 the total squared size, `theta` in
/// [0, 2 pi) the angle about the equilateral axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedState {
    alpha: f64,
    lambda: f64,
    theta: f64,
}

impl RegularizedState {
    /// Validates the ranges and wraps the angle into [0, 2 pi). Binary
    /// collision points (alpha = 0, theta a multiple of 2 pi / 3) are valid
    /// chart coordinates; they are rejected only when converting to a
    /// triangle, which does not exist there.
    pub fn new(alpha: f64, lambda: f64, theta: f64) -> Result<Self, VortexError> {
        if !alpha.is_finite() || !lambda.is_finite() || !theta.is_finite() {
            return Err(VortexError::NonFinite);
        }
        if alpha.abs() >= 1.0 || lambda <= 0.0 {
            return Err(VortexError::InvalidRegularized);
        }
        Ok(Self { alpha, lambda, theta: wrap_angle(theta) })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Squared side lengths for given chart coordinates. Components can be zero
/// or negative when the point lies outside the image of actual triangles.
pub(crate) fn b_from_coords(alpha: f64, lambda: f64, theta: f64) -> [f64; 3] {
    let s = ((1.0 - alpha) * (1.0 + alpha)).max(0.0).sqrt();
    let (sin_t, cos_t) = (theta.sin(), theta.cos());
    let r3 = 3.0f64.sqrt();
    [
        lambda / 6.0 * (2.0 + s * (cos_t - r3 * sin_t)),
        lambda / 6.0 * (2.0 + s * (cos_t + r3 * sin_t)),
        lambda / 3.0 * (1.0 - s * cos_t),
    ]
}

/// Chart coordinates of a shape. Fails on (near-)equilateral shapes, where
/// the angle is undefined.
pub fn to_regularized(state: &ShapeState) -> Result<RegularizedState, VortexError> {
    let [b1, b2, b3] = state.b();
    let lambda = b1 + b2 + b3;
    let alpha = 4.0 * 3.0f64.sqrt() * area(state) / lambda;
    if 1.0 - alpha.abs() < 1e-10 {
        return Err(VortexError::Equilateral);
    }
    let theta = wrap_angle((3.0f64.sqrt() * (b2 - b1)).atan2(lambda - 3.0 * b3));
    RegularizedState::new(alpha, lambda, theta)
}

/// Triangle for given chart coordinates. Fails at and outside the marked
/// binary-collision points, where a squared side stops being positive.
pub fn from_regularized(state: &RegularizedState) -> Result<ShapeState, VortexError> {
    let b = b_from_coords(state.alpha, state.lambda, state.theta);
    for (i, bi) in b.iter().enumerate() {
        if !(*bi > 0.0) {
            return Err(VortexError::BinaryCollision { index: i });
        }
    }
    ShapeState::resolving_orientation(b, Orientation::from_sign(state.alpha))
}

/// Time derivatives (alpha, lambda, theta) of the chart coordinates.
///
/// Fails next to the marked binary-collision points and at the equilateral
/// axis, where the chart itself gives out.
pub fn regularized_field(
    g: &Vorticities,
    state: &RegularizedState,
) -> Result<[f64; 3], VortexError> {
    let b = b_from_coords(state.alpha, state.lambda, state.theta);
    let min_b = b[0].min(b[1]).min(b[2]);
    if !(min_b / state.lambda > COLLISION_HALT) {
        let index = (0..3).min_by(|&i, &j| b[i].total_cmp(&b[j])).unwrap();
        return Err(VortexError::BinaryCollision { index });
    }
    if 1.0 - state.alpha.abs() < EQUILATERAL_HALT {
        return Err(VortexError::Equilateral);
    }
    Ok(field_raw(g, state.alpha, state.lambda, state.theta, b))
}

fn field_raw(g: &Vorticities, alpha: f64, lambda: f64, theta: f64, b: [f64; 3]) -> [f64; 3] {
    let s = ((1.0 - alpha) * (1.0 + alpha)).max(0.0).sqrt();
    let (sin_t, cos_t) = (theta.sin(), theta.cos());
    let r3 = 3.0f64.sqrt();
    let v1 = g.g1() * (1.0 / b[1] - 1.0 / b[2]);
    let v2 = g.g2() * (1.0 / b[2] - 1.0 / b[0]);
    let v3 = g.g3() * (1.0 / b[0] - 1.0 / b[1]);
    let c = r3 / (6.0 * core::f64::consts::PI);
    let alpha_dot = c
        * s
        * ((s + r3 * sin_t - cos_t) * v1 + (s - r3 * sin_t - cos_t) * v2 + (s + 2.0 * cos_t) * v3);
    let lambda_dot = c * alpha * lambda * (v1 + v2 + v3);
    let theta_dot =
        c * alpha / s * (-(sin_t + r3 * cos_t) * v1 - (sin_t - r3 * cos_t) * v2 + 2.0 * sin_t * v3);
    [alpha_dot, lambda_dot, theta_dot]
}

/// Determinant of the Jacobian of the side-length map with respect to the
/// chart coordinates.
pub fn chart_jacobian_det(state: &RegularizedState) -> f64 {
    3.0f64.sqrt() * state.alpha * state.lambda * state.lambda / 18.0
}

/// Integrate in the regularized chart from t = 0 to the horizon.
///
/// Collinear crossings (alpha through zero) are ordinary points here. The
/// run halts close to the marked binary-collision points (which signals an
/// integration artifact, not physics) and close to the equilateral axis.
pub fn integrate_regularized(
    g: &Vorticities,
    state0: &RegularizedState,
    cfg: &IntegratorConfig,
) -> Result<Trajectory<RegularizedState>, VortexError> {
    integrate_regularized_with_events(g, state0, cfg, &[])
}

/// Same as [`integrate_regularized`], landing exactly on each requested time.
pub fn integrate_regularized_with_events(
    g: &Vorticities,
    state0: &RegularizedState,
    cfg: &IntegratorConfig,
    events: &[f64],
) -> Result<Trajectory<RegularizedState>, VortexError> {
    cfg.validate()?;
    // Fail now if the start is already out of the chart's working domain.
    regularized_field(g, state0)?;

    let gv = *g;
    let field = move |y: &[f64], dy: &mut [f64]| -> bool {
        let (alpha, lambda, theta) = (y[0], y[1], y[2]);
        if !alpha.is_finite() || !lambda.is_finite() || !theta.is_finite() {
            return false;
        }
        if 1.0 - alpha.abs() < INVALID_MARGIN || lambda <= 0.0 {
            return false;
        }
        let b = b_from_coords(alpha, lambda, theta);
        if !(b[0].min(b[1]).min(b[2]) / lambda > INVALID_MARGIN) {
            return false;
        }
        let f = field_raw(&gv, alpha, lambda, theta, b);
        dy.copy_from_slice(&f);
        true
    };

    let halt = move |_t: f64, y: &[f64]| -> Option<HaltReason> {
        let b = b_from_coords(y[0], y[1], y[2]);
        if !(b[0].min(b[1]).min(b[2]) / y[1] > COLLISION_HALT) {
            return Some(HaltReason::BinaryCollisionProximity);
        }
        if 1.0 - y[0].abs() < EQUILATERAL_HALT {
            return Some(HaltReason::EquilateralApproach);
        }
        None
    };

    // Integrate with the angle unwrapped; wrap when exposing samples.
    let (raw, halt_reason) = integrate_raw(
        &[state0.alpha, state0.lambda, state0.theta],
        cfg,
        events,
        field,
        halt,
        |_, _| f64::INFINITY,
    );
    let mut samples = alloc::vec::Vec::with_capacity(raw.len());
    for (t, y) in raw {
        samples.push(Sample { t, state: RegularizedState::new(y[0], y[1], y[2])? });
    }
    Ok(Trajectory { samples, halt_reason })
}
