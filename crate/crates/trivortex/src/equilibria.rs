//! Stationary shapes: configurations that rotate or translate rigidly, so
//! their side lengths never change. Equilateral triangles do this for every
//! strength triple; collinear shapes do it exactly when the area rate also
//! vanishes there.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::collapse::t_region;
use crate::error::VortexError;
use crate::shape::area_rate;
use crate::state::{Orientation, ShapeState};
use crate::vorticity::Vorticities;

/// How a shape manages to be stationary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    /// All sides equal; the side field vanishes identically.
    Equilateral,
    /// Degenerate triangle whose area rate also vanishes, so it stays on
    /// the collinear boundary.
    CollinearStationary,
}

/// Decide whether a shape is a fixed point of the side-length flow.
pub fn equilibrium_kind(g: &Vorticities, state: &ShapeState) -> Option<EquilibriumKind> {
    let [b1, b2, b3] = state.b();
    let lambda = state.lambda();
    let spread = (b1 - b2).abs().max((b2 - b3).abs()).max((b3 - b1).abs());
    if spread <= 1e-10 * lambda {
        return Some(EquilibriumKind::Equilateral);
    }
    if state.eps() == Orientation::Collinear {
        // Compare the net area rate against the size of its constituent
        // terms, so the verdict is scale free.
        let t1 = (g.g1() * (1.0 / b2 - 1.0 / b3) * (-b1 + b2 + b3)).abs();
        let t2 = (g.g2() * (1.0 / b3 - 1.0 / b1) * (b1 - b2 + b3)).abs();
        let t3 = (g.g3() * (1.0 / b1 - 1.0 / b2) * (b1 + b2 - b3)).abs();
        let scale = (t1 + t2 + t3) / (8.0 * core::f64::consts::PI);
        if area_rate(g, state).abs() <= 1e-10 * scale {
            return Some(EquilibriumKind::CollinearStationary);
        }
    }
    None
}

/// Which endpoint of the admissible ratio window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    Lower,
    Upper,
}

/// Scaled area rate c * dA/dt, with c = -8 pi / g3 in canonical labels, at
/// the zero second-moment state with side ratios (1 : p : m + n p). Scale
/// free, and valid whether or not the ratio point is admissible.
pub fn ratio_line_area_rate(g: &Vorticities, p: f64) -> Result<f64, VortexError> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(VortexError::InvalidConfig("ratio p must be positive and finite"));
    }
    let (gc, _) = g.canonicalized()?;
    let (m, n) = (gc.m(), gc.n());
    let q = m + n * p;
    // Contributions of each vortex, written purely in side ratios.
    let w1 = (1.0 / p - 1.0 / q) * (p + q - 1.0);
    let w2 = (p / q - p) * ((q + 1.0) / p - 1.0);
    let w3 = (q - q / p) * ((1.0 + p) / q - 1.0);
    Ok(w1 / m + w2 / n - w3)
}

/// The same scaled area rate, evaluated at an endpoint of the admissible
/// window through the closed form in the strength scalars alone.
pub fn boundary_root_area_rate(g: &Vorticities, branch: RootBranch) -> Result<f64, VortexError> {
    let (gc, _) = g.canonicalized()?;
    let (m, n, beta, gamma) = (gc.m(), gc.n(), gc.beta(), gc.gamma());
    if beta < -1e-9 * (1.0 + m.abs() + n.abs()) {
        return Err(VortexError::InvalidConfig("the admissible ratio window is empty"));
    }
    let root = beta.max(0.0).sqrt();
    let sign = match branch {
        RootBranch::Upper => 1.0,
        RootBranch::Lower => -1.0,
    };
    Ok(2.0 * sign * root * gamma / (-(m * n)))
}

/// Collinear relative equilibria on the zero second-moment set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CollinearEquilibria {
    /// None exist for these strengths.
    None,
    /// Vanishing virial: both window endpoints are stationary rays.
    BoundaryRays { p_lo: f64, p_hi: f64 },
    /// Double-root window: the single admissible ratio is stationary.
    DegenerateLine { p: f64 },
}

/// All the shapes that stay fixed under the flow, up to scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumManifold {
    /// The equilateral ray; an equilibrium for every strength triple.
    pub equilateral: bool,
    /// Collinear equilibria on the zero second-moment set.
    pub collinear: CollinearEquilibria,
}

/// Enumerate the stationary rays for a strength triple.
pub fn equilibrium_manifold(g: &Vorticities) -> EquilibriumManifold {
    let collinear = match g.canonicalized() {
        // All strengths share a sign: the second moment never vanishes.
        Err(_) => CollinearEquilibria::None,
        Ok((gc, _)) => {
            let (m, n, beta, gamma) = (gc.m(), gc.n(), gc.beta(), gc.gamma());
            let gate = 1e-9 * (1.0 + m.abs() + n.abs());
            if beta.abs() <= gate {
                CollinearEquilibria::DegenerateLine { p: 1.0 / ((n - 1.0) * (n - 1.0)) }
            } else if gamma.abs() <= gate && beta > 0.0 {
                let region = t_region(g).expect("mixed signs checked above");
                CollinearEquilibria::BoundaryRays { p_lo: region.p_lo, p_hi: region.p_hi }
            } else {
                CollinearEquilibria::None
            }
        }
    };
    EquilibriumManifold { equilateral: true, collinear }
}
