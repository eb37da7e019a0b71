//! Dynamics of three point vortices in the plane, in three mutually
//! consistent formulations.
//!
//! - **Cartesian**: complex positions driven by the classical pairwise
//!   interaction law. Works for any number of vortices and carries the full
//!   rigid-motion information. See [`integrate_cartesian`].
//! - **Shape**: for exactly three vortices, the squared side lengths of the
//!   triangle plus an orientation sign close on themselves. This is the
//!   smallest honest reduction, but its chart breaks down on collinear
//!   shapes. See [`integrate_shape`].
//! - **Regularized**: a normalized-area / size / angle chart on shape space
//!   in which collinear crossings are ordinary interior points, at the cost
//!   of marked singular points where two vortices meet and a degenerate axis
//!   at equilateral shapes. See [`integrate_regularized`].
//!
//! On top of the kinematics, the crate analyzes when three vortices can
//! collapse to a point in finite time: the admissible window of self-similar
//! side ratios ([`t_region`]), the orbit curves through shape space
//! ([`orbit_curve`]), a total classifier ([`classify`]), and the stationary
//! shapes ([`equilibrium_manifold`]).
//!
//! All integrators share one adaptive embedded Runge-Kutta core with exact
//! landing on requested sample times, so trajectories from different
//! formulations can be compared sample by sample.
//!
//! ```
//! use trivortex::{
//!     classify, CollapseDirection, Orientation, ShapeState, Vorticities,
//! };
//!
//! // Strengths with zero virial admit self-similar motion; this shape
//! // shrinks homothetically to a point in finite time.
//! let g = Vorticities::new(1.0, 1.0, -0.5).unwrap();
//! let shape = ShapeState::new(1.0, 3.0, 2.0, Orientation::Positive).unwrap();
//! let class = classify(&g, &shape);
//! assert_eq!(class.collapse_direction, Some(CollapseDirection::Collapse));
//! ```
//!
//! The crate is `no_std`-compatible (with `alloc`) when built without the
//! default `std` feature; math then comes from `libm` via `num-traits`.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
// Validation sites write `!(x > bound)` on purpose: unlike `x <= bound`,
// the negated comparison also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod cartesian;
mod collapse;
mod equilibria;
mod error;
mod invariants;
mod ode;
mod regularized;
mod shape;
mod state;
mod vorticity;

pub use cartesian::{
    cartesian_field, integrate_cartesian, integrate_cartesian_with_events, invariant_drift,
    DriftReport,
};
pub use collapse::{
    classify, lambda_rate_sign, orbit_curve, self_similar_ray, t_region, CollapseDirection,
    OrbitClassification, OrbitKind, TRegion,
};
pub use equilibria::{
    boundary_root_area_rate, equilibrium_kind, equilibrium_manifold, ratio_line_area_rate,
    CollinearEquilibria, EquilibriumKind, EquilibriumManifold, RootBranch,
};
pub use error::VortexError;
pub use invariants::{
    energy, energy_parameter, invariants_general, invariants_of, m_invariant, InvariantSet,
};
pub use ode::{HaltReason, IntegratorConfig, Sample, Trajectory};
pub use regularized::{
    chart_jacobian_det, from_regularized, integrate_regularized, integrate_regularized_with_events,
    regularized_field, to_regularized, RegularizedState,
};
pub use shape::{area_rate, integrate_shape, integrate_shape_with_events, shape_field};
pub use state::{
    admissibility, area, shape_of, Admissibility, CartesianState, Orientation, ShapeState,
    CONE_REL_TOL,
};
pub use vorticity::{CyclicShift, Vorticities};
