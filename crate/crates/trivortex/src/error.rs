use core::fmt;

/// Everything that can go wrong when constructing states or evaluating the
/// dynamics. Integration failures are not errors: they are reported as a
/// [`HaltReason`](crate::ode::HaltReason) on the trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VortexError {
    /// A circulation is zero or non-finite.
    InvalidVorticity { index: usize, value: f64 },
    /// Two vortices occupy the same point.
    Coincident { i: usize, j: usize },
    /// A position or state component is NaN or infinite.
    NonFinite,
    /// The operation is defined for exactly three vortices.
    NotThreeVortices { n: usize },
    /// A squared side length is zero or negative.
    NonPositiveSide { index: usize, value: f64 },
    /// The squared side lengths violate the triangle inequalities.
    InadmissibleShape { residual: f64 },
    /// The stated orientation disagrees with the boundary classification.
    OrientationMismatch,
    /// The shape-space vector field is two-sheeted at collinear states.
    CollinearBoundary,
    /// A side length vanishes: two vortices collide.
    BinaryCollision { index: usize },
    /// Equilateral shapes have no well-defined phase angle.
    Equilateral,
    /// The regularized coordinates are out of range (|alpha| >= 1 or lambda <= 0).
    InvalidRegularized,
    /// All three circulations share a sign; the mixed-sign convention cannot hold.
    NoMixedSigns,
    /// The requested operation needs gamma = 0 (self-similar stratum).
    GammaNonzero { gamma: f64 },
    /// The requested operation needs gamma != 0.
    GammaZero,
    /// The requested operation needs the collision stratum M = 0.
    NonzeroM { m: f64 },
    /// The ray slope lies outside the admissible wedge.
    OutOfRegion { p: f64, p_lo: f64, p_hi: f64 },
    /// m*n = 0 would make the collinear rate formulas degenerate. Cannot occur
    /// for nonzero circulations; checked defensively.
    DegenerateRatios,
    /// An integrator setting violates its range.
    InvalidConfig(&'static str),
}

impl fmt::Display for VortexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VortexError::*;
        match self {
            InvalidVorticity { index, value } => {
                write!(f, "circulation {index} is {value}; must be finite and nonzero")
            }
            Coincident { i, j } => write!(f, "vortices {i} and {j} coincide"),
            NonFinite => write!(f, "non-finite component in state"),
            NotThreeVortices { n } => write!(f, "operation needs exactly 3 vortices, got {n}"),
            NonPositiveSide { index, value } => {
                write!(f, "squared side {index} is {value}; must be positive")
            }
            InadmissibleShape { residual } => {
                write!(f, "side lengths violate the triangle inequalities (residual {residual})")
            }
            OrientationMismatch => {
                write!(f, "orientation sign inconsistent with collinearity of the sides")
            }
            CollinearBoundary => write!(f, "shape field is not single-valued at collinear states"),
            BinaryCollision { index } => write!(f, "side {index} vanishes (binary collision)"),
            Equilateral => write!(f, "phase angle undefined for equilateral shapes"),
            InvalidRegularized => write!(f, "need |alpha| < 1 and lambda > 0"),
            NoMixedSigns => write!(f, "all circulations share a sign"),
            GammaNonzero { gamma } => write!(f, "needs gamma = 0, got {gamma}"),
            GammaZero => write!(f, "needs gamma != 0"),
            NonzeroM { m } => write!(f, "needs M = 0, got {m}"),
            OutOfRegion { p, p_lo, p_hi } => {
                write!(f, "slope {p} outside admissible wedge [{p_lo}, {p_hi}]")
            }
            DegenerateRatios => write!(f, "m*n = 0: collinear rate formulas degenerate"),
            InvalidConfig(what) => write!(f, "invalid integrator config: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for VortexError {}
