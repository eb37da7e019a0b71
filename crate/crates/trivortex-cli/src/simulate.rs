//! The simulate subcommand: integrate one configuration in up to three
//! formulations, write a trajectory CSV per formulation, and summarize
//! drift, halting, and orbit classification in summary.json.

use std::fs;
use std::path::Path;

use serde::Serialize;
use trivortex::{
    classify, energy, from_regularized, integrate_cartesian_with_events,
    integrate_regularized_with_events, integrate_shape_with_events, invariant_drift, m_invariant,
    shape_of, to_regularized, CartesianState, IntegratorConfig, Orientation, RegularizedState,
    ShapeState, Trajectory, Vorticities,
};

use crate::config::{Config, Formulation};
use crate::output::{
    chart_coords, csv, direction_label, fmt_f64, halt_label, kind_label, orientation_sign,
    write_file,
};
use crate::CliError;

enum Start {
    Cartesian(CartesianState),
    Shape(ShapeState),
    Chart(RegularizedState),
}

#[derive(Serialize)]
struct Summary {
    vorticities: [f64; 3],
    formulation: &'static str,
    classification: ClassificationSummary,
    formulations: FormulationMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_formulation_max_deviation: Option<f64>,
}

#[derive(Serialize)]
struct ClassificationSummary {
    kind: &'static str,
    collapse_direction: Option<&'static str>,
    non_collision: bool,
}

#[derive(Serialize)]
struct FormulationMap {
    #[serde(skip_serializing_if = "Option::is_none")]
    cartesian: Option<FormulationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<FormulationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regularized: Option<FormulationSummary>,
}

#[derive(Serialize)]
struct FormulationSummary {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    halt_reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    end_time: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    drift: Option<DriftSummary>,
}

#[derive(Serialize)]
struct DriftSummary {
    energy: f64,
    second_moment: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    impulse: Option<f64>,
}

/// One finished formulation run, reduced to what the outputs need.
struct RunArtifact {
    header: &'static str,
    rows: Vec<Vec<String>>,
    /// Shape at each requested event time, for cross-formulation checks;
    /// None where the run halted before reaching that time.
    event_shapes: Vec<Option<[f64; 3]>>,
    halt: &'static str,
    samples: usize,
    end_time: f64,
    drift: DriftSummary,
}

pub fn run(config: &Config, out: &Path, seed: Option<u64>) -> Result<(), CliError> {
    let g = config.vorticities()?;
    let integ = config.integrator()?;
    let n_samples = config.samples()?;
    let formulation = config.formulation.unwrap_or(Formulation::All);
    let start = resolve_start(config, seed)?;

    fs::create_dir_all(out)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out.display())))?;

    let events: Vec<f64> =
        (1..=n_samples).map(|k| integ.horizon * k as f64 / n_samples as f64).collect();
    let want = |f: Formulation| formulation == Formulation::All || formulation == f;

    // The formulation runs are independent; integrate them concurrently and
    // merge the results in fixed order so the outputs stay deterministic.
    let (cart_res, shape_res, chart_res) = std::thread::scope(|scope| {
        let cart = want(Formulation::Cartesian)
            .then(|| scope.spawn(|| run_cartesian(&g, &start, &integ, &events)));
        let shape = want(Formulation::Shape)
            .then(|| scope.spawn(|| run_shape(&g, &start, &integ, &events)));
        let chart = want(Formulation::Regularized)
            .then(|| scope.spawn(|| run_chart(&g, &start, &integ, &events)));
        let collect = |h: Option<
            std::thread::ScopedJoinHandle<'_, Result<RunArtifact, String>>,
        >| { h.map(|h| h.join().expect("formulation worker panicked")) };
        (collect(cart), collect(shape), collect(chart))
    });

    let mut failures: Vec<String> = Vec::new();
    let mut all_shapes: Vec<Vec<Option<[f64; 3]>>> = Vec::new();
    let mut summaries = FormulationMap { cartesian: None, shape: None, regularized: None };
    if let Some(res) = cart_res {
        summaries.cartesian = Some(settle(
            "cartesian",
            "trajectory_cartesian.csv",
            res,
            out,
            &mut all_shapes,
            &mut failures,
        )?);
    }
    if let Some(res) = shape_res {
        summaries.shape = Some(settle(
            "shape",
            "trajectory_shape.csv",
            res,
            out,
            &mut all_shapes,
            &mut failures,
        )?);
    }
    if let Some(res) = chart_res {
        summaries.regularized = Some(settle(
            "regularized",
            "trajectory_regularized.csv",
            res,
            out,
            &mut all_shapes,
            &mut failures,
        )?);
    }

    let cross = cross_deviation(formulation, &all_shapes, events.len());
    let shape0 = start_shape(&start);
    let cls = classify(&g, &shape0);
    let summary = Summary {
        vorticities: g.as_array(),
        formulation: formulation_label(formulation),
        classification: ClassificationSummary {
            kind: kind_label(cls.kind),
            collapse_direction: cls.collapse_direction.map(direction_label),
            non_collision: cls.non_collision,
        },
        formulations: summaries,
        cross_formulation_max_deviation: cross,
    };
    let text = serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n";
    write_file(&out.join("summary.json"), &text)?;

    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Runtime(failures.join("; ")))
    }
}

fn formulation_label(f: Formulation) -> &'static str {
    match f {
        Formulation::Cartesian => "cartesian",
        Formulation::Shape => "shape",
        Formulation::Regularized => "regularized",
        Formulation::All => "all",
    }
}

fn resolve_start(config: &Config, seed: Option<u64>) -> Result<Start, CliError> {
    let Some(ic) = &config.initial_condition else {
        return Ok(seeded_start(seed.unwrap_or(0)));
    };
    let given =
        ic.cartesian.is_some() as u8 + ic.shape.is_some() as u8 + ic.regularized.is_some() as u8;
    if given != 1 {
        return Err(CliError::Config(
            "initial_condition must set exactly one of \"cartesian\", \"shape\", \"regularized\""
                .into(),
        ));
    }
    if let Some(points) = &ic.cartesian {
        if points.len() != 3 {
            return Err(CliError::Config(format!(
                "initial_condition.cartesian needs exactly 3 points, got {}",
                points.len()
            )));
        }
        let xy: Vec<(f64, f64)> = points.iter().map(|p| (p[0].0, p[1].0)).collect();
        let state = CartesianState::from_xy(&xy)
            .map_err(|e| CliError::Config(format!("initial_condition.cartesian: {e}")))?;
        return Ok(Start::Cartesian(state));
    }
    if let Some(shape) = &ic.shape {
        let eps = match shape.eps {
            1 => Orientation::Positive,
            -1 => Orientation::Negative,
            0 => Orientation::Collinear,
            other => {
                return Err(CliError::Config(format!(
                    "initial_condition.shape.eps must be 1, -1, or 0, got {other}"
                )))
            }
        };
        let state = ShapeState::new(shape.b[0].0, shape.b[1].0, shape.b[2].0, eps)
            .map_err(|e| CliError::Config(format!("initial_condition.shape: {e}")))?;
        return Ok(Start::Shape(state));
    }
    let chart = ic.regularized.as_ref().expect("one variant is set");
    let state = RegularizedState::new(chart.alpha.0, chart.lambda.0, chart.theta.0)
        .map_err(|e| CliError::Config(format!("initial_condition.regularized: {e}")))?;
    // Reject coordinates whose realized sides leave the admissible region,
    // so every later conversion is infallible.
    from_regularized(&state)
        .map_err(|e| CliError::Config(format!("initial_condition.regularized: {e}")))?;
    Ok(Start::Chart(state))
}

/// Deterministic interior starting shape for a given seed: comfortably away
/// from both the collinear boundary and the equilateral axis.
fn seeded_start(seed: u64) -> Start {
    let mut s = seed ^ 0x9e37_79b9_7f4a_7c15;
    if s == 0 {
        s = 0x9e37_79b9_7f4a_7c15;
    }
    let mut draw = move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        (s >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..4 {
        draw();
    }
    let sign = if draw() < 0.5 { -1.0 } else { 1.0 };
    let alpha = sign * (0.2 + 0.6 * draw());
    let lambda = 3.0 + 6.0 * draw();
    let theta = std::f64::consts::TAU * draw();
    let state = RegularizedState::new(alpha, lambda, theta).expect("drawn coordinates are valid");
    Start::Chart(state)
}

fn start_shape(start: &Start) -> ShapeState {
    match start {
        Start::Cartesian(c) => shape_of(c).expect("validated positions have a shape"),
        Start::Shape(s) => *s,
        Start::Chart(r) => from_regularized(r).expect("chart start checked at load"),
    }
}

fn settle(
    name: &str,
    file: &str,
    res: Result<RunArtifact, String>,
    out: &Path,
    shapes: &mut Vec<Vec<Option<[f64; 3]>>>,
    failures: &mut Vec<String>,
) -> Result<FormulationSummary, CliError> {
    match res {
        Ok(a) => {
            write_file(&out.join(file), &csv(a.header, &a.rows))?;
            shapes.push(a.event_shapes);
            Ok(FormulationSummary {
                status: "ok",
                error: None,
                halt_reason: Some(a.halt),
                samples: Some(a.samples),
                end_time: Some(a.end_time),
                drift: Some(a.drift),
            })
        }
        Err(msg) => {
            failures.push(format!("{name}: {msg}"));
            Ok(FormulationSummary {
                status: "error",
                error: Some(msg),
                halt_reason: None,
                samples: None,
                end_time: None,
                drift: None,
            })
        }
    }
}

fn run_cartesian(
    g: &Vorticities,
    start: &Start,
    integ: &IntegratorConfig,
    events: &[f64],
) -> Result<RunArtifact, String> {
    let state = match start {
        Start::Cartesian(c) => c.clone(),
        Start::Shape(s) => s.realize(),
        Start::Chart(r) => from_regularized(r).expect("chart start checked at load").realize(),
    };
    let traj = integrate_cartesian_with_events(&g.as_array(), &state, integ, events)
        .map_err(|e| e.to_string())?;
    Ok(cartesian_artifact(g, &traj, events))
}

fn run_shape(
    g: &Vorticities,
    start: &Start,
    integ: &IntegratorConfig,
    events: &[f64],
) -> Result<RunArtifact, String> {
    let traj = integrate_shape_with_events(g, &start_shape(start), integ, events)
        .map_err(|e| e.to_string())?;
    Ok(shape_artifact(g, &traj, events))
}

fn run_chart(
    g: &Vorticities,
    start: &Start,
    integ: &IntegratorConfig,
    events: &[f64],
) -> Result<RunArtifact, String> {
    let coords = match start {
        Start::Chart(r) => *r,
        other => to_regularized(&start_shape(other)).map_err(|e| e.to_string())?,
    };
    let traj =
        integrate_regularized_with_events(g, &coords, integ, events).map_err(|e| e.to_string())?;
    Ok(chart_artifact(g, &traj, events))
}

fn cartesian_artifact(
    g: &Vorticities,
    traj: &Trajectory<CartesianState>,
    events: &[f64],
) -> RunArtifact {
    let mut rows = Vec::with_capacity(traj.samples.len());
    for s in &traj.samples {
        let sh = shape_of(&s.state).expect("integrator samples stay admissible");
        let b = sh.b();
        let (alpha, lambda, theta) = chart_coords(b, sh.eps());
        let mut row = vec![fmt_f64(s.t)];
        for z in s.state.positions() {
            row.push(fmt_f64(z.re));
            row.push(fmt_f64(z.im));
        }
        row.extend([energy(g, b), m_invariant(g, b), alpha, lambda, theta].map(fmt_f64));
        rows.push(row);
    }
    let report = invariant_drift(&g.as_array(), traj).expect("trajectory is nonempty");
    RunArtifact {
        header: "t,x1,y1,x2,y2,x3,y3,h,m,alpha,lambda,theta",
        rows,
        event_shapes: events
            .iter()
            .map(|&t| {
                traj.at_time(t)
                    .map(|st| shape_of(st).expect("integrator samples stay admissible").b())
            })
            .collect(),
        halt: halt_label(traj.halt_reason),
        samples: traj.samples.len(),
        end_time: traj.last().t,
        drift: DriftSummary {
            energy: report.energy,
            second_moment: report.m,
            impulse: Some(report.impulse),
        },
    }
}

fn shape_artifact(g: &Vorticities, traj: &Trajectory<ShapeState>, events: &[f64]) -> RunArtifact {
    let mut rows = Vec::with_capacity(traj.samples.len());
    for s in &traj.samples {
        let b = s.state.b();
        let (alpha, lambda, theta) = chart_coords(b, s.state.eps());
        let mut row = vec![fmt_f64(s.t)];
        row.extend(b.map(fmt_f64));
        row.push(orientation_sign(s.state.eps()).to_string());
        row.extend([energy(g, b), m_invariant(g, b), alpha, lambda, theta].map(fmt_f64));
        rows.push(row);
    }
    RunArtifact {
        header: "t,b1,b2,b3,eps,h,m,alpha,lambda,theta",
        rows,
        event_shapes: events.iter().map(|&t| traj.at_time(t).map(|st| st.b())).collect(),
        halt: halt_label(traj.halt_reason),
        samples: traj.samples.len(),
        end_time: traj.last().t,
        drift: b_drift(g, traj.samples.iter().map(|s| s.state.b())),
    }
}

fn chart_artifact(
    g: &Vorticities,
    traj: &Trajectory<RegularizedState>,
    events: &[f64],
) -> RunArtifact {
    let mut rows = Vec::with_capacity(traj.samples.len());
    for s in &traj.samples {
        let b = from_regularized(&s.state).expect("chart samples stay admissible").b();
        rows.push(vec![
            fmt_f64(s.t),
            fmt_f64(s.state.alpha()),
            fmt_f64(s.state.lambda()),
            fmt_f64(s.state.theta()),
            fmt_f64(energy(g, b)),
            fmt_f64(m_invariant(g, b)),
        ]);
    }
    RunArtifact {
        header: "t,alpha,lambda,theta,h,m",
        rows,
        event_shapes: events
            .iter()
            .map(|&t| {
                traj.at_time(t)
                    .map(|st| from_regularized(st).expect("chart samples stay admissible").b())
            })
            .collect(),
        halt: halt_label(traj.halt_reason),
        samples: traj.samples.len(),
        end_time: traj.last().t,
        drift: b_drift(
            g,
            traj.samples
                .iter()
                .map(|s| from_regularized(&s.state).expect("chart samples stay admissible").b()),
        ),
    }
}

/// Max absolute drift of the conserved pair along a side-length series.
fn b_drift(g: &Vorticities, series: impl Iterator<Item = [f64; 3]>) -> DriftSummary {
    let mut first: Option<(f64, f64)> = None;
    let (mut eh, mut em) = (0.0f64, 0.0f64);
    for b in series {
        let h = energy(g, b);
        let m = m_invariant(g, b);
        match first {
            None => first = Some((h, m)),
            Some((h0, m0)) => {
                eh = eh.max((h - h0).abs());
                em = em.max((m - m0).abs());
            }
        }
    }
    DriftSummary { energy: eh, second_moment: em, impulse: None }
}

fn cross_deviation(
    formulation: Formulation,
    all_shapes: &[Vec<Option<[f64; 3]>>],
    n_events: usize,
) -> Option<f64> {
    if formulation != Formulation::All || all_shapes.len() < 2 {
        return None;
    }
    let mut best: Option<f64> = None;
    for i in 0..all_shapes.len() {
        for j in (i + 1)..all_shapes.len() {
            for pair in all_shapes[i].iter().zip(&all_shapes[j]).take(n_events) {
                if let (Some(a), Some(b)) = pair {
                    for c in 0..3 {
                        let d = (a[c] - b[c]).abs();
                        best = Some(best.map_or(d, |v| v.max(d)));
                    }
                }
            }
        }
    }
    best
}
