//! Seeded, data-parallel Monte Carlo estimation of rejection rates.
//!
//! Each replication draws `n` subjects from its own counter-derived stream,
//! fits the Kaplan-Meier estimator once and applies the one-sided test under
//! all five transformations. Counts are reduced as integers, so results are
//! bitwise identical for any worker count.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::design::{self, DesignResult, DesignSpec, Method};
use crate::error::{Error, Result};
use crate::km;
use crate::normal;
use crate::rng;
use crate::surv_model::{sample_observation, CensoringScheme, Family, Observation, ParametricSurvival};
use crate::transforms::TransformKind;

pub const DEFAULT_REPS: u64 = 100_000;

/// Replications handed to a worker at a time.
const CHUNK: u64 = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    /// Data generated at s0: rejection rate estimates the type I error.
    Null,
    /// Data generated at s1: rejection rate estimates power.
    Alternative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub family: Family,
    pub s0: f64,
    pub s1: f64,
    pub t: f64,
    pub scheme: CensoringScheme,
    pub alpha: f64,
    pub n: u64,
    pub truth: Truth,
}

impl Scenario {
    /// Null scenario: generate at `s0` and test against `s0`.
    pub fn null(family: Family, s0: f64, t: f64, scheme: CensoringScheme, alpha: f64, n: u64) -> Self {
        Self { family, s0, s1: s0, t, scheme, alpha, n, truth: Truth::Null }
    }

    /// Alternative scenario for a design at sample size `n`.
    pub fn alternative(spec: &DesignSpec, n: u64) -> Self {
        Self {
            family: spec.family,
            s0: spec.s0,
            s1: spec.s1,
            t: spec.t,
            scheme: spec.scheme,
            alpha: spec.alpha,
            n,
            truth: Truth::Alternative,
        }
    }

    pub fn generating_survival(&self) -> f64 {
        match self.truth {
            Truth::Null => self.s0,
            Truth::Alternative => self.s1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::domain("sample size must be at least 1"));
        }
        if !(self.s0 > 0.0 && self.s0 < 1.0) {
            return Err(Error::domain(format!("s0 must lie in (0, 1), got {}", self.s0)));
        }
        if !(self.alpha > 0.0 && self.alpha < 0.5) {
            return Err(Error::domain(format!("alpha must lie in (0, 0.5), got {}", self.alpha)));
        }
        if !(self.t > 0.0 && self.t < self.scheme.total()) {
            return Err(Error::domain(format!(
                "analysis time must lie in (0, {}), got {}",
                self.scheme.total(),
                self.t
            )));
        }
        self.event_law().map(|_| ())
    }

    pub fn event_law(&self) -> Result<ParametricSurvival> {
        ParametricSurvival::from_survival_at(self.family, self.generating_survival(), self.t)
    }
}

/// Rejection counts per transformation, indexed like [`TransformKind::ALL`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimResult {
    pub counts: [u64; 5],
    pub reps: u64,
    pub seed: u64,
}

impl SimResult {
    pub fn count(&self, kind: TransformKind) -> u64 {
        self.counts[kind.index()]
    }

    /// P̂ = rejections / replications.
    pub fn p_hat(&self, kind: TransformKind) -> f64 {
        self.count(kind) as f64 / self.reps as f64
    }

    /// √(P̂(1 - P̂)/R).
    pub fn mc_se(&self, kind: TransformKind) -> f64 {
        let p = self.p_hat(kind);
        (p * (1.0 - p) / self.reps as f64).sqrt()
    }
}

pub fn simulate(scenario: &Scenario, reps: u64, seed: u64, workers: usize) -> Result<SimResult> {
    simulate_with_progress(scenario, reps, seed, workers, &|_| {})
}

/// As [`simulate`], calling `progress` with the number of completed
/// replications after every finished chunk.
pub fn simulate_with_progress(
    scenario: &Scenario,
    reps: u64,
    seed: u64,
    workers: usize,
    progress: &(dyn Fn(u64) + Sync),
) -> Result<SimResult> {
    if reps == 0 {
        return Err(Error::domain("replications must be at least 1"));
    }
    if workers == 0 {
        return Err(Error::domain("workers must be at least 1"));
    }
    scenario.validate()?;
    let dist = scenario.event_law()?;
    let critical = normal::upper_critical(scenario.alpha);
    let chunks = reps.div_ceil(CHUNK);
    let done = AtomicU64::new(0);

    let run_chunk = |c: u64| -> [u64; 5] {
        let start = c * CHUNK;
        let end = (start + CHUNK).min(reps);
        let mut counts = [0u64; 5];
        let mut buf = Vec::with_capacity(scenario.n as usize);
        for r in start..end {
            let rejected = replicate(scenario, &dist, critical, seed, r, &mut buf);
            for (c, hit) in counts.iter_mut().zip(rejected) {
                *c += hit as u64;
            }
        }
        let finished = done.fetch_add(end - start, Ordering::Relaxed) + (end - start);
        progress(finished);
        counts
    };
    let add = |mut a: [u64; 5], b: [u64; 5]| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };

    let counts = if workers == 1 {
        (0..chunks).map(run_chunk).fold([0; 5], add)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
        pool.install(|| (0..chunks).into_par_iter().map(run_chunk).reduce(|| [0; 5], add))
    };
    Ok(SimResult { counts, reps, seed })
}

/// One replication: returns the rejection decision for every transformation.
fn replicate(
    scenario: &Scenario,
    dist: &ParametricSurvival,
    critical: f64,
    seed: u64,
    index: u64,
    buf: &mut Vec<Observation>,
) -> [bool; 5] {
    let mut rng = rng::stream(seed, index);
    buf.clear();
    buf.extend((0..scenario.n).map(|_| sample_observation(dist, &scenario.scheme, &mut rng)));
    let (s_hat, var) = km::estimate_at(buf, scenario.t);
    TransformKind::ALL.map(|kind| km::rejects(km::statistic(kind, s_hat, var, scenario.s0), critical))
}

/// Size a design with `method`, then simulate its alternative at that size.
/// Power is read off the design's own transformation.
pub fn run_power_cell(
    spec: &DesignSpec,
    method: Method,
    reps: u64,
    seed: u64,
    workers: usize,
) -> Result<(DesignResult, SimResult)> {
    let design = design::sample_size(spec, method)?;
    let sim = simulate(&Scenario::alternative(spec, design.n), reps, seed, workers)?;
    Ok((design, sim))
}
