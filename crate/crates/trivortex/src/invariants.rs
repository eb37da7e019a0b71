//! Conserved quantities of the point-vortex flow.
//!
//! H is the interaction energy, Z the linear impulse, I the angular impulse,
//! V the virial sum over pairs, and M the pair-weighted sum of squared
//! distances. M = total*I - |Z|^2, so M is conserved and vanishes on the
//! stratum where total collapse is possible.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::PI;
use num_complex::Complex64;

use crate::error::VortexError;
use crate::state::CartesianState;
use crate::vorticity::Vorticities;

/// Snapshot of the conserved quantities of a configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSet {
    /// Interaction energy H.
    pub energy: f64,
    /// M = sum over pairs of g_a g_b |z_a - z_b|^2.
    pub m: f64,
    /// Angular impulse I = sum of g_a |z_a|^2.
    pub inertia: f64,
    /// Linear impulse Z = sum of g_a z_a.
    pub impulse: Complex64,
    /// Virial V = sum over pairs of g_a g_b.
    pub virial: f64,
}

/// Conserved quantities for any number of vortices; `g` must match the state
/// length entrywise.
pub fn invariants_general(g: &[f64], state: &CartesianState) -> Result<InvariantSet, VortexError> {
    let z = state.positions();
    if g.len() != z.len() {
        return Err(VortexError::NotThreeVortices { n: z.len() });
    }
    let mut energy = 0.0;
    let mut m = 0.0;
    let mut virial = 0.0;
    for a in 0..z.len() {
        for b in a + 1..z.len() {
            let d2 = (z[a] - z[b]).norm_sqr();
            if d2 == 0.0 {
                return Err(VortexError::Coincident { i: a, j: b });
            }
            let gg = g[a] * g[b];
            energy -= gg * d2.ln();
            m += gg * d2;
            virial += gg;
        }
    }
    energy /= 4.0 * PI;
    let mut impulse = Complex64::new(0.0, 0.0);
    let mut inertia = 0.0;
    for (ga, za) in g.iter().zip(z) {
        impulse += ga * za;
        inertia += ga * za.norm_sqr();
    }
    Ok(InvariantSet { energy, m, inertia, impulse, virial })
}

/// Conserved quantities of a three-vortex configuration.
pub fn invariants_of(g: &Vorticities, state: &CartesianState) -> Result<InvariantSet, VortexError> {
    if state.len() != 3 {
        return Err(VortexError::NotThreeVortices { n: state.len() });
    }
    invariants_general(&g.as_array(), state)
}

/// Interaction energy from squared sides alone:
/// H = -(1/4 pi) (g1 g2 ln b3 + g2 g3 ln b1 + g3 g1 ln b2).
pub fn energy(g: &Vorticities, b: [f64; 3]) -> f64 {
    let [g1, g2, g3] = g.as_array();
    -(g1 * g2 * b[2].ln() + g2 * g3 * b[0].ln() + g3 * g1 * b[1].ln()) / (4.0 * PI)
}

/// M from squared sides alone: g1 g2 b3 + g2 g3 b1 + g3 g1 b2.
pub fn m_invariant(g: &Vorticities, b: [f64; 3]) -> f64 {
    let [g1, g2, g3] = g.as_array();
    g1 * g2 * b[2] + g2 * g3 * b[0] + g3 * g1 * b[1]
}

/// Energy parameter h = exp(-4 pi H / (g1 g2)), a positive conserved scalar.
/// On the M = 0 stratum it fixes the orbit curve through b3 = h b1^m b2^n.
pub fn energy_parameter(g: &Vorticities, energy: f64) -> f64 {
    (-4.0 * PI * energy / (g.g1() * g.g2())).exp()
}
