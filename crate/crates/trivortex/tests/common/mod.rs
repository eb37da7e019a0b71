//! Shared randomized ensembles for the acceptance suite. Built once per test
//! binary so the binary-collision scan can sweep every trajectory produced by
//! the other checks.

use std::sync::OnceLock;

use trivortex::{
    from_regularized, integrate_cartesian, integrate_cartesian_with_events, integrate_regularized,
    integrate_regularized_with_events, integrate_shape_with_events, invariants_general,
    to_regularized, CartesianState, HaltReason, IntegratorConfig, Orientation, RegularizedState,
    ShapeState, Trajectory, Vorticities,
};

pub const TAU: f64 = core::f64::consts::TAU;

/// Deterministic uniform draw in [0, 1).
pub fn xorshift(s: &mut u64) -> f64 {
    *s ^= *s << 13;
    *s ^= *s >> 7;
    *s ^= *s << 17;
    (*s >> 11) as f64 / (1u64 << 53) as f64
}

pub fn uniform(s: &mut u64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * xorshift(s)
}

/// Squared sides of a regularized sample, via the chart inverse.
pub fn reg_sides(state: &RegularizedState) -> [f64; 3] {
    from_regularized(state).expect("sampled state stays inside the chart").b()
}

/// Conservation ensemble: mixed-sign strengths, well-separated triangles,
/// integrated to the horizon at default tolerances.
pub struct ConservationRun {
    pub g: [f64; 3],
    pub traj: Trajectory<CartesianState>,
}

/// One initial condition integrated in all three formulations over a shared
/// event grid.
pub struct AgreementRun {
    pub times: Vec<f64>,
    pub cartesian: Trajectory<CartesianState>,
    pub shape: Trajectory<ShapeState>,
    pub regularized: Trajectory<RegularizedState>,
}

/// The self-similar collapse run plus its event grids.
pub struct RayRun {
    pub lambda0: f64,
    pub coarse: Vec<f64>,
    pub traj: Trajectory<RegularizedState>,
}

pub struct Ensembles {
    pub conservation: Vec<ConservationRun>,
    pub agreement: Vec<AgreementRun>,
    pub ray: RayRun,
    pub converse: Vec<(Vorticities, Trajectory<RegularizedState>)>,
}

pub fn ensembles() -> &'static Ensembles {
    static CELL: OnceLock<Ensembles> = OnceLock::new();
    CELL.get_or_init(|| Ensembles {
        conservation: build_conservation(),
        agreement: build_agreement(),
        ray: build_ray(),
        converse: build_converse(),
    })
}

const SIGN_PATTERNS: [[f64; 3]; 6] = [
    [1.0, 1.0, -1.0],
    [1.0, -1.0, 1.0],
    [-1.0, 1.0, 1.0],
    [1.0, -1.0, -1.0],
    [-1.0, 1.0, -1.0],
    [-1.0, -1.0, 1.0],
];

fn random_triangle(s: &mut u64) -> CartesianState {
    loop {
        let pts: Vec<(f64, f64)> =
            (0..3).map(|_| (uniform(s, -1.5, 1.5), uniform(s, -1.5, 1.5))).collect();
        let state = CartesianState::from_xy(&pts).unwrap();
        if state.min_pair_distance_sq() >= 0.64 {
            return state;
        }
    }
}

fn build_conservation() -> Vec<ConservationRun> {
    let mut s = 0x9e3779b97f4a7c15u64;
    let cfg = IntegratorConfig::default();
    let mut runs = Vec::with_capacity(50);
    while runs.len() < 50 {
        let pattern = SIGN_PATTERNS[(xorshift(&mut s) * 6.0) as usize % 6];
        let g: Vec<f64> = pattern.iter().map(|sign| sign * uniform(&mut s, 0.3, 1.5)).collect();
        let state = random_triangle(&mut s);
        // Keep the invariants away from zero so relative drift is meaningful.
        let inv = invariants_general(&g, &state).unwrap();
        if inv.energy.abs() < 0.02 || inv.m.abs() < 0.02 || inv.impulse.norm() < 0.02 {
            continue;
        }
        let traj = integrate_cartesian(&g, &state, &cfg).unwrap();
        runs.push(ConservationRun { g: [g[0], g[1], g[2]], traj });
    }
    runs
}

fn build_agreement() -> Vec<AgreementRun> {
    let mut s = 0x243f6a8885a308d3u64;
    let times: Vec<f64> = (1..=60).map(|k| k as f64 * 0.05).collect();
    let cfg = IntegratorConfig {
        rel_tol: 1e-12,
        abs_tol: 1e-12,
        horizon: 3.0,
        ..IntegratorConfig::default()
    };
    let mut runs = Vec::with_capacity(20);
    while runs.len() < 20 {
        let g = Vorticities::new(
            uniform(&mut s, 0.7, 1.3),
            uniform(&mut s, 0.7, 1.3),
            -uniform(&mut s, 0.35, 0.65),
        )
        .unwrap();
        let mag = uniform(&mut s, 0.25, 0.75);
        let alpha = if xorshift(&mut s) < 0.5 { -mag } else { mag };
        let coords =
            RegularizedState::new(alpha, uniform(&mut s, 4.0, 9.0), uniform(&mut s, 0.0, TAU))
                .unwrap();
        let shape0 = match from_regularized(&coords) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let cartesian =
            integrate_cartesian_with_events(&g.as_array(), &shape0.realize(), &cfg, &times)
                .unwrap();
        if cartesian.halt_reason != HaltReason::HorizonReached {
            continue;
        }
        let shape = integrate_shape_with_events(&g, &shape0, &cfg, &times).unwrap();
        let regularized = integrate_regularized_with_events(&g, &coords, &cfg, &times).unwrap();
        runs.push(AgreementRun { times: times.clone(), cartesian, shape, regularized });
    }
    runs
}

fn build_ray() -> RayRun {
    let g = Vorticities::new(1.0, 1.0, -0.5).unwrap();
    let shape0 = ShapeState::new(1.0, 3.0, 2.0, Orientation::Positive).unwrap();
    let coords = to_regularized(&shape0).unwrap();
    let coarse: Vec<f64> = (0..=24).map(|k| k as f64 * 0.5).collect();
    let fine: Vec<f64> = (0..=60).map(|k| 13.29 + k as f64 * 0.0005).collect();
    let mut events = coarse.clone();
    events.extend_from_slice(&fine);
    let cfg = IntegratorConfig {
        rel_tol: 1e-12,
        abs_tol: 1e-12,
        horizon: 13.3205,
        ..IntegratorConfig::default()
    };
    let traj = integrate_regularized_with_events(&g, &coords, &cfg, &events).unwrap();
    RayRun { lambda0: shape0.lambda(), coarse, traj }
}

fn build_converse() -> Vec<(Vorticities, Trajectory<RegularizedState>)> {
    let mut s = 0xb7e151628aed2a6bu64;
    let cfg = IntegratorConfig { horizon: 50.0, ..IntegratorConfig::default() };
    let mut runs = Vec::with_capacity(20);
    while runs.len() < 20 {
        let m = uniform(&mut s, 0.15, 0.9);
        let n = uniform(&mut s, 0.15, 0.9);
        if (1.0 - m - n).abs() < 0.12 {
            continue;
        }
        let g = Vorticities::new(1.0, m / n, -m).unwrap();
        let region = trivortex::t_region(&g).unwrap();
        if !region.exists || region.degenerate {
            continue;
        }
        let p = region.p_lo + uniform(&mut s, 0.2, 0.8) * (region.p_hi - region.p_lo);
        let raw = region.shift.inverse().apply_array([1.0, p, m + n * p]);
        let scale = 6.0 / (raw[0] + raw[1] + raw[2]);
        let eps =
            if xorshift(&mut s) < 0.5 { Orientation::Positive } else { Orientation::Negative };
        let shape0 = ShapeState::new(scale * raw[0], scale * raw[1], scale * raw[2], eps).unwrap();
        let coords = to_regularized(&shape0).unwrap();
        let traj = integrate_regularized(&g, &coords, &cfg).unwrap();
        runs.push((g, traj));
    }
    runs
}
