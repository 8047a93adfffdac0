//! Request and response types shared by the command line and the HTTP
//! service, and the functions that answer them. Both front ends call these,
//! so identical inputs give identical numbers.

use std::collections::BTreeMap;

use kmdesign_core::design::{self, DesignResult, DesignSpec, Method};
use kmdesign_core::mcsim::{self, Scenario, Truth};
use kmdesign_core::tables::{StudyPreset, PRESETS};
use kmdesign_core::{CensoringScheme, Family, TransformKind};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;

/// Upper bound on replications accepted from a single request.
pub const MAX_REPS: u64 = 10_000_000;
/// Upper bound on a request's worker budget.
pub const MAX_WORKERS: usize = 256;
/// Power curves are thinned to at most this many points per kind.
pub const CURVE_POINTS: u64 = 200;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    #[default]
    Exp,
    Weibull,
}

fn default_alpha() -> f64 {
    0.05
}

fn default_power() -> f64 {
    0.8
}

/// Design inputs. `accrual` and `followup` also accept `a` and `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignRequest {
    pub s0: f64,
    pub s1: f64,
    pub t: f64,
    #[serde(alias = "a")]
    pub accrual: f64,
    #[serde(alias = "b")]
    pub followup: f64,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_power")]
    pub power: f64,
    #[serde(default)]
    pub family: FamilyName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<f64>,
    #[serde(default)]
    pub censor_fraction: f64,
    #[serde(default)]
    pub method: Method,
    /// Transformations to evaluate; all five when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kinds: Option<Vec<TransformKind>>,
    /// Attach power-curve samples to a sample-size response.
    #[serde(default)]
    pub curve: bool,
}

impl DesignRequest {
    pub fn family(&self) -> Result<Family, ApiError> {
        match (self.family, self.shape) {
            (FamilyName::Exp, None) => Ok(Family::Exponential),
            (FamilyName::Exp, Some(1.0)) => Ok(Family::Exponential),
            (FamilyName::Exp, Some(_)) => Err(ApiError::domain("shape applies only to the weibull family")),
            (FamilyName::Weibull, Some(k)) => Ok(Family::weibull(k)?),
            (FamilyName::Weibull, None) => Err(ApiError::domain("the weibull family needs a shape")),
        }
    }

    pub fn kinds(&self) -> Result<Vec<TransformKind>, ApiError> {
        match &self.kinds {
            None => Ok(TransformKind::ALL.to_vec()),
            Some(k) if k.is_empty() => Err(ApiError::domain("kinds must not be empty")),
            Some(k) => Ok(k.clone()),
        }
    }

    pub fn spec(&self, kind: TransformKind) -> Result<DesignSpec, ApiError> {
        if !(self.power > 0.0 && self.power < 1.0) {
            return Err(ApiError::domain(format!("power must lie in (0, 1), got {}", self.power)));
        }
        let scheme = CensoringScheme::new(self.accrual, self.followup, self.censor_fraction)?;
        Ok(DesignSpec::new(self.s0, self.s1, self.t, self.alpha, 1.0 - self.power, kind, scheme, self.family()?)?)
    }

    /// Copy with the defaults made explicit, as echoed in responses.
    pub fn resolved(&self) -> Result<Self, ApiError> {
        Ok(Self { kinds: Some(self.kinds()?), ..self.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub n: u64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerCurve {
    pub kind: TransformKind,
    pub method: Method,
    /// The design's own sample size for this kind.
    pub n: u64,
    pub points: Vec<CurvePoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignResponse {
    pub inputs: DesignRequest,
    pub results: Vec<DesignResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<Vec<PowerCurve>>,
}

pub fn sample_size(req: &DesignRequest) -> Result<DesignResponse, ApiError> {
    let inputs = req.resolved()?;
    let results = designs(&inputs)?;
    let curve = if req.curve { Some(curves(&inputs, &results)?) } else { None };
    Ok(DesignResponse { inputs, results, curve })
}

fn designs(req: &DesignRequest) -> Result<Vec<DesignResult>, ApiError> {
    req.kinds()?
        .into_iter()
        .map(|kind| Ok(design::sample_size(&req.spec(kind)?, req.method)?))
        .collect()
}

/// Curve range [max(2, n_max / 2), 3 n_max / 2] where n_max is the largest
/// design sample size across the requested kinds.
fn curves(req: &DesignRequest, results: &[DesignResult]) -> Result<Vec<PowerCurve>, ApiError> {
    let n_max = results.iter().map(|r| r.n).max().unwrap_or(2);
    let lo = (n_max / 2).max(2);
    let hi = (n_max * 3).div_ceil(2).max(lo);
    let step = (hi - lo).div_ceil(CURVE_POINTS).max(1);
    let mut grid: Vec<u64> = (lo..=hi).step_by(step as usize).collect();
    if grid.last() != Some(&hi) {
        grid.push(hi);
    }
    results
        .iter()
        .map(|r| {
            let spec = req.spec(r.kind)?;
            let points = grid
                .iter()
                .map(|&n| Ok(CurvePoint { n, power: design::power(&spec, req.method, n)? }))
                .collect::<Result<Vec<_>, ApiError>>()?;
            Ok(PowerCurve { kind: r.kind, method: req.method, n: r.n, points })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveResponse {
    pub inputs: DesignRequest,
    pub power_target: f64,
    pub curves: Vec<PowerCurve>,
}

pub fn power_curve(req: &DesignRequest) -> Result<CurveResponse, ApiError> {
    let inputs = req.resolved()?;
    let results = designs(&inputs)?;
    let curves = curves(&inputs, &results)?;
    Ok(CurveResponse { power_target: inputs.power, inputs, curves })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerRequest {
    #[serde(flatten)]
    pub design: DesignRequest,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerEntry {
    pub kind: TransformKind,
    pub method: Method,
    pub n: u64,
    pub power: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerResponse {
    pub inputs: PowerRequest,
    pub results: Vec<PowerEntry>,
}

pub fn power(req: &PowerRequest) -> Result<PowerResponse, ApiError> {
    let design = req.design.resolved()?;
    let results = design
        .kinds()?
        .into_iter()
        .map(|kind| {
            let power = design::power(&design.spec(kind)?, design.method, req.n)?;
            Ok(PowerEntry { kind, method: design.method, n: req.n, power })
        })
        .collect::<Result<Vec<_>, ApiError>>()?;
    Ok(PowerResponse { inputs: PowerRequest { design, n: req.n }, results })
}

fn default_reps() -> u64 {
    mcsim::DEFAULT_REPS
}

fn default_seed() -> u64 {
    1
}

fn default_workers() -> usize {
    1
}

fn default_truth() -> Truth {
    Truth::Alternative
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateRequest {
    #[serde(flatten)]
    pub design: DesignRequest,
    /// Fixed sample size for every kind; each kind's design size when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default = "default_truth")]
    pub truth: Truth,
    #[serde(default = "default_reps")]
    pub reps: u64,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_workers")]
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimEntry {
    pub kind: TransformKind,
    pub method: Method,
    pub n: u64,
    pub rejections: u64,
    pub p_hat: f64,
    pub mc_se: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateResponse {
    pub inputs: SimulateRequest,
    pub results: Vec<SimEntry>,
}

/// Simulation work, sized before running so progress can report a total.
pub struct SimPlan {
    inputs: SimulateRequest,
    /// Sample size per requested kind.
    sizes: Vec<(TransformKind, u64)>,
    /// Distinct sample sizes; kinds sharing n share one run.
    runs: Vec<u64>,
}

impl SimPlan {
    pub fn new(req: &SimulateRequest) -> Result<Self, ApiError> {
        if req.reps == 0 || req.reps > MAX_REPS {
            return Err(ApiError::domain(format!("reps must lie in 1..={MAX_REPS}, got {}", req.reps)));
        }
        if req.workers == 0 || req.workers > MAX_WORKERS {
            return Err(ApiError::domain(format!("workers must lie in 1..={MAX_WORKERS}, got {}", req.workers)));
        }
        if req.n == Some(0) {
            return Err(ApiError::domain("n must be at least 1"));
        }
        let design = req.design.resolved()?;
        let sizes = design
            .kinds()?
            .into_iter()
            .map(|kind| {
                let n = match req.n {
                    Some(n) => n,
                    None => design::sample_size(&design.spec(kind)?, design.method)?.n,
                };
                Ok((kind, n))
            })
            .collect::<Result<Vec<_>, ApiError>>()?;
        let mut runs: Vec<u64> = sizes.iter().map(|&(_, n)| n).collect();
        runs.sort_unstable();
        runs.dedup();
        Ok(Self { inputs: SimulateRequest { design, ..req.clone() }, sizes, runs })
    }

    pub fn total_reps(&self) -> u64 {
        self.inputs.reps * self.runs.len() as u64
    }

    /// Run every distinct sample size, reporting cumulative replications.
    pub fn run(self, progress: &(dyn Fn(u64) + Sync)) -> Result<SimulateResponse, ApiError> {
        let req = &self.inputs;
        let spec = req.design.spec(self.sizes[0].0)?;
        let mut by_n = BTreeMap::new();
        for (i, &n) in self.runs.iter().enumerate() {
            let mut scenario = Scenario::alternative(&spec, n);
            if req.truth == Truth::Null {
                scenario = Scenario::null(spec.family, spec.s0, spec.t, spec.scheme, spec.alpha, n);
            }
            let offset = i as u64 * req.reps;
            let sim = mcsim::simulate_with_progress(&scenario, req.reps, req.seed, req.workers, &|done| {
                progress(offset + done)
            })?;
            by_n.insert(n, sim);
        }
        let results = self
            .sizes
            .iter()
            .map(|&(kind, n)| {
                let sim = &by_n[&n];
                SimEntry {
                    kind,
                    method: req.design.method,
                    n,
                    rejections: sim.count(kind),
                    p_hat: sim.p_hat(kind),
                    mc_se: sim.mc_se(kind),
                }
            })
            .collect();
        Ok(SimulateResponse { inputs: self.inputs, results })
    }
}

pub fn simulate(req: &SimulateRequest) -> Result<SimulateResponse, ApiError> {
    SimPlan::new(req)?.run(&|_| {})
}

pub fn presets() -> Vec<StudyPreset> {
    PRESETS.to_vec()
}

/// A preset as a design request.
pub fn preset_request(p: &StudyPreset) -> DesignRequest {
    DesignRequest {
        s0: p.s0,
        s1: p.s1,
        t: p.t,
        accrual: p.a,
        followup: p.b,
        alpha: p.alpha,
        power: p.power,
        family: FamilyName::Exp,
        shape: None,
        censor_fraction: 0.0,
        method: Method::Proposed,
        kinds: None,
        curve: false,
    }
}
