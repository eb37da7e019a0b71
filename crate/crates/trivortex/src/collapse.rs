//! Where self-similar collapse lives: the admissible window of side ratios
//! on the zero second-moment set, the orbit curves through it, and the
//! classification of a state's orbit.
//!
//! Everything here works in the canonical labeling (odd-signed vortex
//! third); inputs are relabeled on the way in and results mapped back on the
//! way out, so callers keep their own vortex order.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::VortexError;
use crate::invariants::m_invariant;
use crate::state::ShapeState;
use crate::vorticity::{CyclicShift, Vorticities};

/// Relative width used to decide that a derived scalar vanishes.
fn scalar_gate(m: f64, n: f64) -> f64 {
    1e-9 * (1.0 + m.abs() + n.abs())
}

/// Scale-aware threshold below which the second-moment invariant counts as
/// zero for a shape of total squared size `lambda`.
fn m_gate(g: &Vorticities, lambda: f64) -> f64 {
    let w = (g.g1() * g.g2()).abs() + (g.g2() * g.g3()).abs() + (g.g3() * g.g1()).abs();
    1e-9 * lambda * w
}

fn gated_sign(x: f64, gate: f64) -> i8 {
    if x > gate {
        1
    } else if x < -gate {
        -1
    } else {
        0
    }
}

/// Window of side ratios p = b2/b1 for which the zero second-moment ratio
/// point (1 : p : m + n p) is an admissible triangle. The endpoints are the
/// roots of a quadratic in p; a root escapes to 0 or infinity when one of
/// the ratio scalars passes through 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TRegion {
    /// Whether any admissible ratio exists.
    pub exists: bool,
    /// The window is a single ratio (double root).
    pub degenerate: bool,
    /// Lower endpoint; NaN when the window is empty, possibly 0.
    pub p_lo: f64,
    /// Upper endpoint; NaN when the window is empty, possibly infinite.
    pub p_hi: f64,
    /// Relabeling that was applied to reach the canonical order. Ratios are
    /// expressed in canonical labels; apply the inverse to map side triples
    /// back to the caller's order.
    pub shift: CyclicShift,
}

impl TRegion {
    pub fn contains(&self, p: f64) -> bool {
        self.exists && p >= self.p_lo && p <= self.p_hi
    }
}

/// Admissibility window of the zero second-moment ratio line.
pub fn t_region(g: &Vorticities) -> Result<TRegion, VortexError> {
    let (gc, shift) = g.canonicalized()?;
    let (m, n, beta) = (gc.m(), gc.n(), gc.beta());
    let gate = scalar_gate(m, n);

    if beta < -gate {
        return Ok(TRegion {
            exists: false,
            degenerate: false,
            p_lo: f64::NAN,
            p_hi: f64::NAN,
            shift,
        });
    }
    if beta.abs() <= gate {
        // Double root; beta = 0 rules out n = 1.
        let p = 1.0 / ((n - 1.0) * (n - 1.0));
        return Ok(TRegion { exists: true, degenerate: true, p_lo: p, p_hi: p, shift });
    }

    let m_at_one = (m - 1.0).abs() <= 1e-9 * (1.0 + m.abs());
    let n_at_one = (n - 1.0).abs() <= 1e-9 * (1.0 + n.abs());
    let (p_lo, p_hi) = match (m_at_one, n_at_one) {
        // Leading coefficient vanishes: one root runs off to infinity.
        (false, true) => ((m - 1.0) * (m - 1.0) / 4.0, f64::INFINITY),
        // Constant term vanishes: one root sits at zero.
        (true, false) => {
            let d = n - 1.0;
            (0.0, 4.0 / (d * d))
        }
        (true, true) => (0.0, f64::INFINITY),
        (false, false) => {
            let r = beta.sqrt();
            let d = n - 1.0;
            let lo = (1.0 - r) / d;
            let hi = (1.0 + r) / d;
            // Squares of the two branches; either may be the larger one.
            let (a, b) = (lo * lo, hi * hi);
            (a.min(b), a.max(b))
        }
    };
    Ok(TRegion { exists: true, degenerate: false, p_lo, p_hi, shift })
}

/// Point with side ratios (1 : p : m + n p) on the orbit with energy
/// parameter `h`, exp(-4 pi H / (g1 g2)) in the labeling of `g`. The scale
/// comes from h through the virial-weighted exponent, which exists only when
/// that exponent is nonzero. The returned sides are in the caller's
/// labeling and are not necessarily admissible; check before realizing.
pub fn orbit_curve(g: &Vorticities, h: f64, p: f64) -> Result<[f64; 3], VortexError> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(VortexError::InvalidConfig("energy parameter must be positive and finite"));
    }
    if !(p > 0.0) || !p.is_finite() {
        return Err(VortexError::InvalidConfig("ratio p must be positive and finite"));
    }
    let (gc, shift) = g.canonicalized()?;
    let (m, n, gamma) = (gc.m(), gc.n(), gc.gamma());
    if gamma.abs() <= scalar_gate(m, n) {
        return Err(VortexError::GammaZero);
    }
    // The energy parameter depends on which pair of strengths normalizes it;
    // move it to the canonical pair in log space.
    let ln_h = h.ln() * (g.g1() * g.g2()) / (gc.g1() * gc.g2());
    let ln_x = (ln_h + n * p.ln() - (m + n * p).ln()) / gamma;
    let x = ln_x.exp();
    let b = [x, p * x, (m + n * p) * x];
    if b.iter().any(|v| !v.is_finite() || *v <= 0.0) {
        return Err(VortexError::NonFinite);
    }
    Ok(shift.inverse().apply_array(b))
}

/// Unit direction of the self-similar ray with ratio p, plus the energy
/// parameter shared by every point on it. Needs a vanishing virial (so the
/// energy is scale free) and p inside the admissible window.
pub fn self_similar_ray(g: &Vorticities, p: f64) -> Result<([f64; 3], f64), VortexError> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(VortexError::InvalidConfig("ratio p must be positive and finite"));
    }
    let (gc, shift) = g.canonicalized()?;
    let (m, n, gamma) = (gc.m(), gc.n(), gc.gamma());
    if gamma.abs() > scalar_gate(m, n) {
        return Err(VortexError::GammaNonzero { gamma });
    }
    let region = t_region(g)?;
    if !region.contains(p) {
        return Err(VortexError::OutOfRegion { p, p_lo: region.p_lo, p_hi: region.p_hi });
    }
    let d = [1.0, p, m + n * p];
    let norm = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    let dir = [d[0] / norm, d[1] / norm, d[2] / norm];
    let h = ((m + n * p).ln() - n * p.ln()).exp();
    Ok((shift.inverse().apply_array(dir), h))
}

/// Family structure of the orbit curves on the zero second-moment set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    /// Vanishing virial: a one-parameter family of self-similar rays.
    SelfSimilarFamily,
    /// Positive virial exponent: closed, bounded orbit curves.
    BoundedCurve,
    /// Negative virial exponent: orbit curves escaping to infinity.
    UnboundedCurve,
    /// Double-root window: the admissible set is a single ray of relative
    /// equilibria.
    EquilibriumLine,
    /// No admissible zero second-moment states at all.
    Empty,
}

/// Fate of a self-similar state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollapseDirection {
    /// Total size shrinks to zero in finite time.
    Collapse,
    /// Time-reversed collapse: the size grows without bound.
    Ejection,
    /// The size is stationary; the configuration rotates rigidly.
    RelativeEquilibrium,
}

/// What kind of orbit passes through a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitClassification {
    /// Scalar-level family structure for these strengths.
    pub kind: OrbitKind,
    /// Set only when the state itself is self-similar (vanishing virial and
    /// second moment): whether it collapses, ejects, or rotates in place.
    pub collapse_direction: Option<CollapseDirection>,
    /// Whether the orbit through this state stays away from total collision
    /// in both time directions.
    pub non_collision: bool,
}

/// Classify the orbit through a shape. Total: every admissible state and
/// every valid strength triple gets an answer.
pub fn classify(g: &Vorticities, state: &ShapeState) -> OrbitClassification {
    let b = state.b();
    let lambda = state.lambda();
    let mval = m_invariant(g, b);

    let (gc, shift) = match g.canonicalized() {
        // All strengths share a sign: the second moment cannot vanish and
        // the motion is bounded.
        Err(_) => {
            return OrbitClassification {
                kind: OrbitKind::BoundedCurve,
                collapse_direction: None,
                non_collision: true,
            }
        }
        Ok(pair) => pair,
    };
    let (m, n) = (gc.m(), gc.n());
    let gate = scalar_gate(m, n);
    let (beta, gamma) = (gc.beta(), gc.gamma());
    let gamma_zero = gamma.abs() <= gate;

    if mval.abs() > m_gate(g, lambda) {
        // Off the zero second-moment set there is no collapse; the kind
        // still reports the family structure for these strengths.
        let kind = if gamma_zero {
            OrbitKind::SelfSimilarFamily
        } else if gamma > 0.0 {
            OrbitKind::BoundedCurve
        } else {
            OrbitKind::UnboundedCurve
        };
        return OrbitClassification { kind, collapse_direction: None, non_collision: true };
    }

    if gamma_zero {
        // Self-similar state: the sign of the size rate is fixed along the
        // whole orbit and readable from the shape alone.
        let bc = shift.apply_array(b);
        let rate_sign = gated_sign(gc.g3(), 0.0) as i32
            * state.eps().sign() as i32
            * gated_sign(bc[1] - bc[0], 1e-9 * lambda) as i32;
        let direction = match rate_sign {
            0 => CollapseDirection::RelativeEquilibrium,
            s if s < 0 => CollapseDirection::Collapse,
            _ => CollapseDirection::Ejection,
        };
        return OrbitClassification {
            kind: OrbitKind::SelfSimilarFamily,
            collapse_direction: Some(direction),
            non_collision: direction == CollapseDirection::RelativeEquilibrium,
        };
    }
    if beta.abs() <= gate {
        // The admissible window is the double-root ray, so a zero
        // second-moment state sits on it and rotates rigidly.
        return OrbitClassification {
            kind: OrbitKind::EquilibriumLine,
            collapse_direction: Some(CollapseDirection::RelativeEquilibrium),
            non_collision: true,
        };
    }
    if beta < 0.0 {
        // No admissible zero second-moment states exist for these strengths;
        // reachable only through the gate width at the numerical margin.
        return OrbitClassification {
            kind: OrbitKind::Empty,
            collapse_direction: None,
            non_collision: true,
        };
    }
    let kind = if gamma > 0.0 { OrbitKind::BoundedCurve } else { OrbitKind::UnboundedCurve };
    OrbitClassification { kind, collapse_direction: None, non_collision: true }
}

/// Sign of the size rate for a self-similar state: -1 collapsing, +1
/// ejecting, 0 stationary. Demands a vanishing virial and second moment,
/// since only then is the sign a constant of the motion.
pub fn lambda_rate_sign(g: &Vorticities, state: &ShapeState) -> Result<i8, VortexError> {
    let (gc, shift) = g.canonicalized()?;
    let gamma = gc.gamma();
    if gamma.abs() > scalar_gate(gc.m(), gc.n()) {
        return Err(VortexError::GammaNonzero { gamma });
    }
    let mval = m_invariant(g, state.b());
    if mval.abs() > m_gate(g, state.lambda()) {
        return Err(VortexError::NonzeroM { m: mval });
    }
    let bc = shift.apply_array(state.b());
    let s = gated_sign(gc.g3(), 0.0) as i32
        * state.eps().sign() as i32
        * gated_sign(bc[1] - bc[0], 1e-9 * state.lambda()) as i32;
    Ok(s as i8)
}
