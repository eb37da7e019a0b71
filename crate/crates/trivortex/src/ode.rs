//! Shared adaptive integrator: embedded Dormand-Prince 5(4) with PI step
//! control and first-same-as-last reuse. All three formulations drive their
//! flattened state vectors through this loop; formulation-specific guards
//! come in as closures (stage validity, halt conditions, step caps).

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::VortexError;

/// Integrator settings shared by all formulations.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegratorConfig {
    /// Relative tolerance, in (0, 1).
    pub rel_tol: f64,
    /// Absolute tolerance, in (0, 1).
    pub abs_tol: f64,
    /// Upper bound on the step size; may be infinite.
    pub max_step: f64,
    /// Integration end time, > 0.
    pub horizon: f64,
    /// Cartesian collision guard: halt when the minimum pairwise distance
    /// drops below this length. `None` picks 1e-6 * sqrt(lambda_0) from the
    /// initial condition; `Some(0.0)` disables the guard.
    pub halt_min_distance: Option<f64>,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-10,
            max_step: f64::INFINITY,
            horizon: 10.0,
            halt_min_distance: None,
        }
    }
}

impl IntegratorConfig {
    pub(crate) fn validate(&self) -> Result<(), VortexError> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(VortexError::InvalidConfig("rel_tol must lie in (0, 1)"));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol < 1.0) {
            return Err(VortexError::InvalidConfig("abs_tol must lie in (0, 1)"));
        }
        if !(self.max_step > 0.0) {
            return Err(VortexError::InvalidConfig("max_step must be positive"));
        }
        if !self.horizon.is_finite() || self.horizon <= 0.0 {
            return Err(VortexError::InvalidConfig("horizon must be positive and finite"));
        }
        if let Some(d) = self.halt_min_distance {
            if !(d >= 0.0) {
                return Err(VortexError::InvalidConfig("halt_min_distance must be nonnegative"));
            }
        }
        Ok(())
    }
}

/// Why an integration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaltReason {
    /// Reached the configured horizon.
    HorizonReached,
    /// Cartesian minimum pairwise distance fell below the guard.
    CollisionApproach,
    /// Shape-space trajectory neared the collinear boundary, where the field
    /// stops being single-valued.
    BoundaryApproach,
    /// Regularized trajectory neared a binary-collision point of the chart.
    /// The dynamics never reaches these, so this flags an integration
    /// artifact rather than physics.
    BinaryCollisionProximity,
    /// Regularized trajectory neared the equilateral chart boundary.
    EquilateralApproach,
    /// Step size underflowed or stages kept leaving the admissible domain.
    StepFailure,
}

/// One accepted sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample<S> {
    pub t: f64,
    pub state: S,
}

/// Accepted samples in increasing time, plus why the run ended. Requested
/// event times are landed on exactly and appear as ordinary samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<S> {
    pub samples: Vec<Sample<S>>,
    pub halt_reason: HaltReason,
}

impl<S> Trajectory<S> {
    pub fn last(&self) -> &Sample<S> {
        self.samples.last().expect("trajectory holds at least the initial sample")
    }

    /// State at a requested event time, if the run got that far.
    pub fn at_time(&self, t: f64) -> Option<&S> {
        self.samples.iter().find(|s| s.t == t).map(|s| &s.state)
    }
}

// Dormand-Prince 5(4) tableau. The node times are omitted: every field
// integrated here is autonomous.
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0];
const A6: [f64; 5] =
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0];
// Fifth-order weights; also row 7 of A (first-same-as-last).
const B: [f64; 6] =
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0];
// Difference between the 5th- and 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

// PI controller constants.
const SAFE: f64 = 0.9;
const BETA: f64 = 0.04;
const EXPO1: f64 = 0.2 - BETA * 0.75;
const FACC1: f64 = 5.0; // reciprocal of the max shrink factor 0.2
const FACC2: f64 = 0.1; // reciprocal of the max growth factor 10
const MAX_SAMPLES: usize = 5_000_000;

fn step_floor(t: f64) -> f64 {
    16.0 * f64::EPSILON * t.abs().max(1.0)
}

/// Keep the event times that fall strictly inside (0, horizon), sorted and
/// deduplicated.
pub(crate) fn prepare_events(events: &[f64], horizon: f64) -> Vec<f64> {
    let mut ev: Vec<f64> =
        events.iter().copied().filter(|&t| t > 0.0 && t < horizon * (1.0 - 1e-15)).collect();
    ev.sort_by(|a, b| a.partial_cmp(b).expect("event times are finite"));
    ev.dedup();
    ev
}

/// Drive one flattened state vector from t = 0 to the horizon.
///
/// `field` writes the derivative and reports whether the point was inside the
/// domain; a stage outside the domain rejects the whole step and halves it.
/// `halt` inspects accepted samples. `step_cap` bounds the next step from the
/// current sample (return infinity for no cap).
pub(crate) fn integrate_raw<F, H, C2>(
    y0: &[f64],
    cfg: &IntegratorConfig,
    events: &[f64],
    mut field: F,
    mut halt: H,
    mut step_cap: C2,
) -> (Vec<(f64, Vec<f64>)>, HaltReason)
where
    F: FnMut(&[f64], &mut [f64]) -> bool,
    H: FnMut(f64, &[f64]) -> Option<HaltReason>,
    C2: FnMut(f64, &[f64]) -> f64,
{
    let n = y0.len();
    let horizon = cfg.horizon;
    let events = prepare_events(events, horizon);
    let mut ev_idx = 0usize;

    let mut samples: Vec<(f64, Vec<f64>)> = vec![(0.0, y0.to_vec())];
    let mut t = 0.0;
    let mut y = y0.to_vec();

    if let Some(reason) = halt(t, &y) {
        return (samples, reason);
    }

    let mut k: [Vec<f64>; 7] = core::array::from_fn(|_| vec![0.0; n]);
    if !field(&y, &mut k[0]) {
        return (samples, HaltReason::StepFailure);
    }

    let next_stop = |ev_idx: usize| -> f64 {
        if ev_idx < events.len() {
            events[ev_idx].min(horizon)
        } else {
            horizon
        }
    };

    let mut h = initial_step(&y, &k[0], cfg, &mut field)
        .min(cfg.max_step)
        .min(next_stop(ev_idx) - t)
        .min(step_cap(t, &y));
    h = h.max(step_floor(t));

    let mut facold: f64 = 1e-4;
    let mut rejected = false;
    let mut ynew = vec![0.0; n];
    let mut ystage = vec![0.0; n];

    loop {
        if samples.len() >= MAX_SAMPLES {
            return (samples, HaltReason::StepFailure);
        }
        if h < step_floor(t) {
            return (samples, HaltReason::StepFailure);
        }

        // Land exactly on the next event time or the horizon.
        let stop = next_stop(ev_idx);
        let mut landing = false;
        if t + 1.01 * h >= stop {
            h = stop - t;
            landing = true;
            if h <= 0.0 {
                // Degenerate leftover; treat the stop as reached.
                t = stop;
                if ev_idx < events.len() && stop < horizon {
                    ev_idx += 1;
                    h = 2.0 * step_floor(t);
                    continue;
                }
                return (samples, HaltReason::HorizonReached);
            }
        }

        // Stages 2..6.
        let rows: [&[f64]; 5] = [&A2, &A3, &A4, &A5, &A6];
        let mut stage_ok = true;
        for (si, row) in rows.iter().enumerate() {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, aj) in row.iter().enumerate() {
                    acc += aj * k[j][i];
                }
                ystage[i] = y[i] + h * acc;
            }
            if !field(&ystage, &mut k[si + 1]) {
                stage_ok = false;
                break;
            }
        }
        if stage_ok {
            // Fifth-order solution, then the first-same-as-last stage at it.
            for i in 0..n {
                let mut acc = 0.0;
                for j in 0..6 {
                    acc += B[j] * k[j][i];
                }
                ynew[i] = y[i] + h * acc;
            }
            stage_ok = field(&ynew, &mut k[6]);
        }
        if !stage_ok {
            h *= 0.5;
            rejected = true;
            continue;
        }

        // Scaled error norm.
        let mut err_sq = 0.0;
        for i in 0..n {
            let mut e = 0.0;
            for j in 0..7 {
                e += E[j] * k[j][i];
            }
            e *= h;
            let sk = cfg.abs_tol + cfg.rel_tol * y[i].abs().max(ynew[i].abs());
            err_sq += (e / sk) * (e / sk);
        }
        let err = (err_sq / n as f64).sqrt();

        if !err.is_finite() {
            h *= 0.5;
            rejected = true;
            continue;
        }

        if err <= 1.0 {
            // Accept.
            t = if landing { stop } else { t + h };
            core::mem::swap(&mut y, &mut ynew);
            k.swap(0, 6);
            samples.push((t, y.clone()));

            if let Some(reason) = halt(t, &y) {
                return (samples, reason);
            }
            if t >= horizon {
                return (samples, HaltReason::HorizonReached);
            }
            if landing && ev_idx < events.len() && t == events[ev_idx] {
                ev_idx += 1;
            }

            let fac11 = err.powf(EXPO1);
            let fac = (fac11 / facold.powf(BETA) / SAFE).clamp(FACC2, FACC1);
            let mut hnew = h / fac;
            if rejected {
                hnew = hnew.min(h);
            }
            facold = err.max(1e-4);
            rejected = false;
            h = hnew.min(cfg.max_step).min(step_cap(t, &y));
        } else {
            let fac11 = err.powf(EXPO1);
            h /= (fac11 / SAFE).min(FACC1);
            rejected = true;
        }
    }
}

/// Automatic initial step: match the scale of the solution and its first two
/// derivatives, then clamp to the first stop.
fn initial_step<F>(y0: &[f64], f0: &[f64], cfg: &IntegratorConfig, field: &mut F) -> f64
where
    F: FnMut(&[f64], &mut [f64]) -> bool,
{
    let n = y0.len();
    let sk: Vec<f64> = y0.iter().map(|v| cfg.abs_tol + cfg.rel_tol * v.abs()).collect();
    let rms = |v: &[f64]| -> f64 {
        let s: f64 = v.iter().zip(&sk).map(|(x, s)| (x / s) * (x / s)).sum();
        (s / n as f64).sqrt()
    };
    let d0 = rms(y0);
    let d1 = rms(f0);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    let h0 = h0.min(cfg.horizon * 0.5);

    let y1: Vec<f64> = y0.iter().zip(f0).map(|(y, f)| y + h0 * f).collect();
    let mut f1 = vec![0.0; n];
    if !field(&y1, &mut f1) {
        return h0 * 1e-2;
    }
    let diff: Vec<f64> = f1.iter().zip(f0).map(|(a, b)| a - b).collect();
    let d2 = rms(&diff) / h0;

    let dm = d1.max(d2);
    let h1 = if dm <= 1e-15 { (h0 * 1e-3).max(1e-6) } else { (0.01 / dm).powf(0.2) };
    (100.0 * h0).min(h1).min(cfg.horizon)
}
