//! JSON configuration schema shared by the subcommands, with exact-rational
//! numeric parsing and validation against the library's constructors.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use trivortex::{IntegratorConfig, Vorticities};

use crate::CliError;

/// A float that also accepts decimal or rational strings ("0.75", "-1/2",
/// Unicode minus included), so codimension-one inputs such as a vanishing
/// virial can be written without rounding.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(try_from = "RawNumeric")]
pub struct Numeric(pub f64);

#[derive(Deserialize)]
#[serde(untagged)]
enum RawNumeric {
    Number(f64),
    Text(String),
}

impl TryFrom<RawNumeric> for Numeric {
    type Error = String;

    fn try_from(raw: RawNumeric) -> Result<Self, String> {
        match raw {
            RawNumeric::Number(v) => Ok(Numeric(v)),
            RawNumeric::Text(s) => parse_numeric(&s).map(Numeric),
        }
    }
}

fn parse_numeric(text: &str) -> Result<f64, String> {
    let cleaned = text.trim().replace('\u{2212}', "-");
    let parse = |part: &str| {
        part.trim().parse::<f64>().map_err(|_| format!("cannot parse {part:?} as a number"))
    };
    match cleaned.split_once('/') {
        Some((num, den)) => {
            let den = parse(den)?;
            if den == 0.0 {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(parse(num)? / den)
        }
        None => parse(&cleaned),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub vorticities: Option<[Numeric; 3]>,
    #[serde(default)]
    pub initial_condition: Option<InitialCondition>,
    #[serde(default)]
    pub formulation: Option<Formulation>,
    #[serde(default)]
    pub integrator: Option<IntegratorSection>,
    /// Number of evenly spaced output samples over the horizon.
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub sweep: Option<SweepSection>,
}

/// Exactly one of the three representations must be given.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialCondition {
    /// Vortex positions as [x, y] pairs; exactly three.
    #[serde(default)]
    pub cartesian: Option<Vec<[Numeric; 2]>>,
    #[serde(default)]
    pub shape: Option<ShapeIc>,
    #[serde(default)]
    pub regularized: Option<ChartIc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeIc {
    /// Squared side lengths (b1, b2, b3).
    pub b: [Numeric; 3],
    /// Orientation sign: +1, -1, or 0 for collinear.
    pub eps: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartIc {
    pub alpha: Numeric,
    pub lambda: Numeric,
    pub theta: Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formulation {
    Cartesian,
    Shape,
    Regularized,
    All,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegratorSection {
    #[serde(default)]
    pub rel_tol: Option<Numeric>,
    #[serde(default)]
    pub abs_tol: Option<Numeric>,
    #[serde(default)]
    pub horizon: Option<Numeric>,
    #[serde(default)]
    pub max_step: Option<Numeric>,
    #[serde(default)]
    pub halt_min_distance: Option<Numeric>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub m: RangeSpec,
    pub n: RangeSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeSpec {
    pub start: Numeric,
    pub stop: Numeric,
    pub step: Numeric,
}

pub fn load(path: &Path) -> Result<Config, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

impl Config {
    pub fn vorticities(&self) -> Result<Vorticities, CliError> {
        let raw = self
            .vorticities
            .ok_or_else(|| CliError::Config("config needs a \"vorticities\" entry".into()))?;
        Vorticities::new(raw[0].0, raw[1].0, raw[2].0)
            .map_err(|e| CliError::Config(format!("vorticities: {e}")))
    }

    pub fn integrator(&self) -> Result<IntegratorConfig, CliError> {
        let mut cfg = IntegratorConfig::default();
        if let Some(section) = &self.integrator {
            if let Some(v) = section.rel_tol {
                cfg.rel_tol = v.0;
            }
            if let Some(v) = section.abs_tol {
                cfg.abs_tol = v.0;
            }
            if let Some(v) = section.horizon {
                cfg.horizon = v.0;
            }
            if let Some(v) = section.max_step {
                cfg.max_step = v.0;
            }
            if let Some(v) = section.halt_min_distance {
                cfg.halt_min_distance = Some(v.0);
            }
        }
        // Mirror the integrator's own checks so mistakes surface as
        // configuration errors rather than run failures.
        if !(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) {
            return Err(CliError::Config("integrator tolerances must be positive".into()));
        }
        if !(cfg.horizon > 0.0) || !cfg.horizon.is_finite() {
            return Err(CliError::Config("integrator horizon must be positive and finite".into()));
        }
        if !(cfg.max_step > 0.0) {
            return Err(CliError::Config("integrator max_step must be positive".into()));
        }
        if let Some(d) = cfg.halt_min_distance {
            if !(d > 0.0) || !d.is_finite() {
                return Err(CliError::Config(
                    "integrator halt_min_distance must be positive and finite".into(),
                ));
            }
        }
        Ok(cfg)
    }

    pub fn samples(&self) -> Result<usize, CliError> {
        let n = self.samples.unwrap_or(200);
        if n == 0 {
            return Err(CliError::Config("samples must be at least 1".into()));
        }
        if n > 1_000_000 {
            return Err(CliError::Config("samples must be at most 1000000".into()));
        }
        Ok(n)
    }
}
