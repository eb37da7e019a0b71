//! Point-vortex configurations and their shape (squared side lengths).
//!
//! Shape indexing is cyclic: side i joins vortices j and k where (i, j, k)
//! runs over (1,2,3), (2,3,1), (3,1,2). So b1 = |z2 - z3|^2 and so on.
//! A triple of squared sides comes from an actual triangle exactly when
//!
//!   b1^2 + b2^2 + b3^2 <= 2 (b1 b2 + b1 b3 + b2 b3),
//!
//! with equality at collinear configurations. The left-over orientation of
//! the triangle is carried separately as a sign.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::VortexError;

/// Relative tolerance on the cone residual (normalized by lambda^2) below
/// which a shape counts as collinear.
pub const CONE_REL_TOL: f64 = 1e-9;

/// Triangle orientation: sign of twice the signed area.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Negative,
    Collinear,
    Positive,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Negative => -1.0,
            Orientation::Collinear => 0.0,
            Orientation::Positive => 1.0,
        }
    }

    /// Orientation with the sign of `x` (exact zero maps to Collinear).
    pub fn from_sign(x: f64) -> Self {
        if x > 0.0 {
            Orientation::Positive
        } else if x < 0.0 {
            Orientation::Negative
        } else {
            Orientation::Collinear
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Negative => Orientation::Positive,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::Positive => Orientation::Negative,
        }
    }
}

/// Where a squared-side triple sits relative to the admissible cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Interior,
    Boundary,
    Outside,
}

/// Cone residual 2*(b1 b2 + b1 b3 + b2 b3) - (b1^2 + b2^2 + b3^2).
/// Equals 16 A^2 for realizable triples.
pub(crate) fn cone_residual(b: [f64; 3]) -> f64 {
    2.0 * (b[0] * b[1] + b[0] * b[2] + b[1] * b[2]) - (b[0] * b[0] + b[1] * b[1] + b[2] * b[2])
}

/// Classify a positive triple against the admissible cone. The boundary band
/// is |residual| <= CONE_REL_TOL * lambda^2, which matches the square-root
/// triangle inequalities up to that tolerance.
pub fn admissibility(b1: f64, b2: f64, b3: f64) -> Admissibility {
    let b = [b1, b2, b3];
    let lambda = b1 + b2 + b3;
    let res = cone_residual(b);
    let tol = CONE_REL_TOL * lambda * lambda;
    if res > tol {
        Admissibility::Interior
    } else if res >= -tol {
        Admissibility::Boundary
    } else {
        Admissibility::Outside
    }
}

/// Positions of N >= 2 point vortices in the plane, pairwise distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianState {
    z: Vec<Complex64>,
}

impl CartesianState {
    pub fn new(z: Vec<Complex64>) -> Result<Self, VortexError> {
        if z.len() < 2 {
            return Err(VortexError::NotThreeVortices { n: z.len() });
        }
        if z.iter().any(|p| !p.re.is_finite() || !p.im.is_finite()) {
            return Err(VortexError::NonFinite);
        }
        for i in 0..z.len() {
            for j in i + 1..z.len() {
                // Exact coincidence only; near-misses are the integrator's
                // business, not the constructor's.
                if z[i] == z[j] {
                    return Err(VortexError::Coincident { i, j });
                }
            }
        }
        Ok(Self { z })
    }

    /// Convenience constructor from (x, y) pairs.
    pub fn from_xy(points: &[(f64, f64)]) -> Result<Self, VortexError> {
        Self::new(points.iter().map(|&(x, y)| Complex64::new(x, y)).collect())
    }

    pub(crate) fn from_raw(z: Vec<Complex64>) -> Self {
        Self { z }
    }

    pub fn positions(&self) -> &[Complex64] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    pub fn min_pair_distance_sq(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.z.len() {
            for j in i + 1..self.z.len() {
                let d = (self.z[i] - self.z[j]).norm_sqr();
                if d < best {
                    best = d;
                }
            }
        }
        best
    }
}

/// Squared side lengths of a three-vortex configuration plus its orientation.
/// Sides are positive and satisfy the cone inequality; the orientation is
/// Collinear exactly when the triple sits in the boundary band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeState {
    b: [f64; 3],
    eps: Orientation,
}

impl ShapeState {
    pub fn new(b1: f64, b2: f64, b3: f64, eps: Orientation) -> Result<Self, VortexError> {
        let b = [b1, b2, b3];
        Self::check_sides(b)?;
        match admissibility(b1, b2, b3) {
            Admissibility::Outside => {
                Err(VortexError::InadmissibleShape { residual: cone_residual(b) })
            }
            Admissibility::Boundary if eps != Orientation::Collinear => {
                Err(VortexError::OrientationMismatch)
            }
            Admissibility::Interior if eps == Orientation::Collinear => {
                Err(VortexError::OrientationMismatch)
            }
            _ => Ok(Self { b, eps }),
        }
    }

    /// Like `new`, but lets the boundary classification override the
    /// orientation hint. Used when rebuilding states from raw coordinates
    /// (integration samples, chart pullbacks) where the hint may sit inside
    /// the collinearity tolerance band.
    pub(crate) fn resolving_orientation(
        b: [f64; 3],
        hint: Orientation,
    ) -> Result<Self, VortexError> {
        Self::check_sides(b)?;
        match admissibility(b[0], b[1], b[2]) {
            Admissibility::Outside => {
                Err(VortexError::InadmissibleShape { residual: cone_residual(b) })
            }
            Admissibility::Boundary => Ok(Self { b, eps: Orientation::Collinear }),
            Admissibility::Interior => {
                if hint == Orientation::Collinear {
                    Err(VortexError::OrientationMismatch)
                } else {
                    Ok(Self { b, eps: hint })
                }
            }
        }
    }

    fn check_sides(b: [f64; 3]) -> Result<(), VortexError> {
        for (index, &value) in b.iter().enumerate() {
            if !value.is_finite() || value <= 0.0 {
                return Err(VortexError::NonPositiveSide { index, value });
            }
        }
        Ok(())
    }

    /// Same shape with cyclically relabeled sides. Valid only for inputs that
    /// are a permutation of `self.b()`, which keeps admissibility intact.
    pub(crate) fn relabeled(&self, b: [f64; 3]) -> Self {
        Self { b, eps: self.eps }
    }

    pub fn b(&self) -> [f64; 3] {
        self.b
    }

    pub fn b1(&self) -> f64 {
        self.b[0]
    }

    pub fn b2(&self) -> f64 {
        self.b[1]
    }

    pub fn b3(&self) -> f64 {
        self.b[2]
    }

    pub fn eps(&self) -> Orientation {
        self.eps
    }

    /// Perimeter of squares, lambda = b1 + b2 + b3.
    pub fn lambda(&self) -> f64 {
        self.b[0] + self.b[1] + self.b[2]
    }

    pub fn admissibility(&self) -> Admissibility {
        admissibility(self.b[0], self.b[1], self.b[2])
    }

    pub fn reflected(&self) -> Self {
        Self { b: self.b, eps: self.eps.flipped() }
    }

    /// One planar configuration with these squared sides and orientation:
    /// z1 at the origin, z2 on the positive x-axis, z3 in the half-plane
    /// selected by the orientation.
    pub fn realize(&self) -> CartesianState {
        let [b1, b2, b3] = self.b;
        let d3 = b3.sqrt();
        let x = (b2 + b3 - b1) / (2.0 * d3);
        let y2 = (b2 - x * x).max(0.0);
        let y = self.eps.sign() * y2.sqrt();
        CartesianState::from_raw(alloc::vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(d3, 0.0),
            Complex64::new(x, y),
        ])
    }
}

/// Extract squared side lengths and orientation from a three-vortex
/// configuration. Errors if the state does not hold exactly three vortices
/// or if two of them coincide.
pub fn shape_of(state: &CartesianState) -> Result<ShapeState, VortexError> {
    let z = state.positions();
    if z.len() != 3 {
        return Err(VortexError::NotThreeVortices { n: z.len() });
    }
    let b = [(z[1] - z[2]).norm_sqr(), (z[2] - z[0]).norm_sqr(), (z[0] - z[1]).norm_sqr()];
    for (i, &side) in b.iter().enumerate() {
        if side == 0.0 {
            return Err(VortexError::Coincident { i: (i + 1) % 3, j: (i + 2) % 3 });
        }
    }
    // Twice the signed area; any cyclic pairing of the side vectors gives the
    // same value.
    let w2 = z[2] - z[0];
    let w3 = z[0] - z[1];
    let cross = w2.conj() * w3;
    ShapeState::resolving_orientation(b, Orientation::from_sign(cross.im))
}

/// Signed triangle area from the squared sides (Heron) and the orientation.
/// Zero at collinear shapes; tiny negative round-off under the root is
/// clamped.
pub fn area(s: &ShapeState) -> f64 {
    let res = cone_residual(s.b()).max(0.0);
    s.eps().sign() * res.sqrt() / 4.0
}
