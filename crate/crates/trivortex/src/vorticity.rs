//! Circulations and the derived scalars that organize the phase portrait.
//!
//! For circulations (g1, g2, g3) with g1*g2 > 0 > g1*g3 the ratios
//! m = -g3/g1 and n = -g3/g2 are positive, and
//!
//!   beta  = m + n - m*n      (sign decides whether M = 0 shapes exist)
//!   gamma = 1 - m - n        (sign decides bounded vs unbounded, 0 = self-similar)
//!
//! Two identities tie them back to symmetric functions: gamma * g1 * g2
//! equals the virial sum over pairs, and beta = -(g3/(g1*g2)) * (g1+g2+g3).

use crate::error::VortexError;
use crate::state::ShapeState;

/// Circulation strengths of the three vortices. Each entry is finite and
/// nonzero; signs are unrestricted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vorticities {
    g: [f64; 3],
}

impl Vorticities {
    pub fn new(g1: f64, g2: f64, g3: f64) -> Result<Self, VortexError> {
        let g = [g1, g2, g3];
        for (index, &value) in g.iter().enumerate() {
            if !value.is_finite() || value == 0.0 {
                return Err(VortexError::InvalidVorticity { index, value });
            }
        }
        Ok(Self { g })
    }

    pub fn g1(&self) -> f64 {
        self.g[0]
    }

    pub fn g2(&self) -> f64 {
        self.g[1]
    }

    pub fn g3(&self) -> f64 {
        self.g[2]
    }

    /// Circulations as a slice, indexed 0..3 for vortices 1..3.
    pub fn as_array(&self) -> [f64; 3] {
        self.g
    }

    /// Total circulation g1 + g2 + g3.
    pub fn total(&self) -> f64 {
        self.g[0] + self.g[1] + self.g[2]
    }

    /// Virial sum g1*g2 + g2*g3 + g3*g1.
    pub fn virial(&self) -> f64 {
        self.g[0] * self.g[1] + self.g[1] * self.g[2] + self.g[2] * self.g[0]
    }

    /// Ratio m = -g3/g1.
    pub fn m(&self) -> f64 {
        -self.g[2] / self.g[0]
    }

    /// Ratio n = -g3/g2.
    pub fn n(&self) -> f64 {
        -self.g[2] / self.g[1]
    }

    /// beta = m + n - m*n. Positive iff collinear M = 0 shapes exist.
    pub fn beta(&self) -> f64 {
        let (m, n) = (self.m(), self.n());
        m + n - m * n
    }

    /// gamma = 1 - m - n. Same sign as virial/(g1*g2).
    pub fn gamma(&self) -> f64 {
        1.0 - self.m() - self.n()
    }

    /// True if all three circulations share a sign.
    pub fn same_sign(&self) -> bool {
        let s = self.g[0].signum();
        self.g[1].signum() == s && self.g[2].signum() == s
    }

    /// Cyclically relabel so that the odd-signed vortex sits third, giving
    /// g1*g2 > 0 > g1*g3. Errors when no vortex is odd-signed.
    pub fn canonicalized(&self) -> Result<(Self, CyclicShift), VortexError> {
        if self.same_sign() {
            return Err(VortexError::NoMixedSigns);
        }
        let s0 = self.g[0].signum();
        let odd = if self.g[1].signum() != s0 && self.g[2].signum() != s0 {
            0 // vortex 1 is the odd one out
        } else if self.g[1].signum() != s0 {
            1
        } else {
            2
        };
        let shift = CyclicShift::moving_third(odd);
        Ok((shift.apply_vorticities(self), shift))
    }
}

/// Cyclic relabeling of the vortex indices. Applying shift k sends old index
/// (i + k) mod 3 to new index i; cyclic maps preserve orientation, so the
/// orientation sign of a shape never flips under relabeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicShift {
    k: u8,
}

impl CyclicShift {
    pub const IDENTITY: Self = Self { k: 0 };

    /// The shift that moves `old_index` (0-based) into third position.
    pub fn moving_third(old_index: usize) -> Self {
        debug_assert!(old_index < 3);
        Self { k: ((old_index + 1) % 3) as u8 }
    }

    /// New index i reads from old index (i + k) mod 3.
    pub fn old_index(&self, new_index: usize) -> usize {
        (new_index + self.k as usize) % 3
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0
    }

    /// The shift that undoes this one.
    pub fn inverse(&self) -> Self {
        Self { k: (3 - self.k) % 3 }
    }

    pub fn apply_array(&self, x: [f64; 3]) -> [f64; 3] {
        [x[self.old_index(0)], x[self.old_index(1)], x[self.old_index(2)]]
    }

    pub fn apply_vorticities(&self, g: &Vorticities) -> Vorticities {
        Vorticities { g: self.apply_array(g.g) }
    }

    /// Relabel the squared sides along with the vortices. Side i sits opposite
    /// vortex i, so it moves with the same cycle; orientation is unchanged.
    pub fn apply_shape(&self, s: &ShapeState) -> ShapeState {
        s.relabeled(self.apply_array(s.b()))
    }
}
