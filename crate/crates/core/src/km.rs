//! Kaplan-Meier estimator, Greenwood variance and the one-sided transformed test.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normal;
use crate::surv_model::Observation;
use crate::transforms::TransformKind;

/// Right-censored sample, kept sorted by time with events ahead of
/// censorings at the same time.
#[derive(Debug, Clone, PartialEq)]
pub struct SurvivalSample {
    records: Vec<Observation>,
}

impl SurvivalSample {
    pub fn new(mut records: Vec<Observation>) -> Result<Self> {
        if let Some(bad) = records.iter().find(|r| !(r.time > 0.0 && r.time.is_finite())) {
            return Err(Error::domain(format!("observed times must be positive, got {}", bad.time)));
        }
        records.sort_unstable_by(record_order);
        Ok(Self { records })
    }

    pub fn from_pairs(pairs: &[(f64, bool)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(time, event)| Observation { time, event }).collect())
    }

    pub fn records(&self) -> &[Observation] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

fn record_order(a: &Observation, b: &Observation) -> Ordering {
    a.time
        .partial_cmp(&b.time)
        .unwrap_or(Ordering::Equal)
        .then_with(|| b.event.cmp(&a.event))
}

/// Product-limit fit over the distinct event times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KmFit {
    pub n: usize,
    pub event_times: Vec<f64>,
    pub at_risk: Vec<u64>,
    pub events: Vec<u64>,
    /// Ŝ just after each event time.
    pub survival: Vec<f64>,
    /// Cumulative Greenwood sum Σ d/(Y(Y-d)). A step where every subject at
    /// risk fails contributes nothing; Ŝ is 0 from there on.
    pub greenwood: Vec<f64>,
}

pub fn km_fit(sample: &SurvivalSample) -> Result<KmFit> {
    if sample.is_empty() {
        return Err(Error::domain("cannot fit an empty sample"));
    }
    Ok(fit_sorted(sample.records()))
}

fn fit_sorted(records: &[Observation]) -> KmFit {
    let n = records.len();
    let mut fit = KmFit {
        n,
        event_times: Vec::new(),
        at_risk: Vec::new(),
        events: Vec::new(),
        survival: Vec::new(),
        greenwood: Vec::new(),
    };
    let mut remaining = n as u64;
    let mut s = 1.0;
    let mut g = 0.0;
    let mut i = 0;
    while i < n {
        let time = records[i].time;
        let mut d = 0u64;
        let mut c = 0u64;
        while i < n && records[i].time == time {
            if records[i].event {
                d += 1;
            } else {
                c += 1;
            }
            i += 1;
        }
        if d > 0 {
            let y = remaining;
            if d == y {
                s = 0.0;
            } else {
                s *= 1.0 - d as f64 / y as f64;
                g += d as f64 / (y as f64 * (y - d) as f64);
            }
            fit.event_times.push(time);
            fit.at_risk.push(y);
            fit.events.push(d);
            fit.survival.push(s);
            fit.greenwood.push(g);
        }
        remaining -= d + c;
    }
    fit
}

impl KmFit {
    fn steps_through(&self, t: f64) -> usize {
        self.event_times.partition_point(|&u| u <= t)
    }

    /// Right-continuous Ŝ(t); constant beyond the last observed time.
    pub fn survival_at(&self, t: f64) -> f64 {
        match self.steps_through(t) {
            0 => 1.0,
            j => self.survival[j - 1],
        }
    }

    pub fn greenwood_sum_at(&self, t: f64) -> f64 {
        match self.steps_through(t) {
            0 => 0.0,
            j => self.greenwood[j - 1],
        }
    }

    /// Greenwood variance Ŝ(t)² Σ d/(Y(Y-d)).
    pub fn greenwood_variance_at(&self, t: f64) -> f64 {
        let s = self.survival_at(t);
        s * s * self.greenwood_sum_at(t)
    }
}

/// Ŝ(t) and its Greenwood variance straight from raw records, without
/// materialising the fit. Sorts `records` in place. Used by the simulation
/// hot loop; agrees with [`km_fit`] followed by the lookups.
pub fn estimate_at(records: &mut [Observation], t: f64) -> (f64, f64) {
    records.sort_unstable_by(record_order);
    let n = records.len();
    let mut remaining = n as u64;
    let mut s = 1.0;
    let mut g = 0.0;
    let mut i = 0;
    while i < n && records[i].time <= t {
        let time = records[i].time;
        let mut d = 0u64;
        let mut c = 0u64;
        while i < n && records[i].time == time {
            if records[i].event {
                d += 1;
            } else {
                c += 1;
            }
            i += 1;
        }
        if d > 0 {
            if d == remaining {
                return (0.0, 0.0);
            }
            s *= 1.0 - d as f64 / remaining as f64;
            g += d as f64 / (remaining as f64 * (remaining - d) as f64);
        }
        remaining -= d + c;
    }
    (s, s * s * g)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum TestStatistic {
    Finite(f64),
    /// Ŝ(t) = 1: no events by t; counted as a rejection.
    SurvivalOne,
    /// Ŝ(t) = 0: never a rejection.
    SurvivalZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub s_hat: f64,
    pub greenwood_var: f64,
    pub z: TestStatistic,
    pub reject: bool,
}

/// One-sided test of H₀: S(t) ≤ s0 on the transformed scale:
/// reject when direction·(g(Ŝ) - g(s0)) / (|g′(Ŝ)| √var) > z_{1-α}.
pub fn test(kind: TransformKind, fit: &KmFit, t: f64, s0: f64, alpha: f64) -> Result<TestOutcome> {
    if !(s0 > 0.0 && s0 < 1.0) {
        return Err(Error::domain(format!("null survival must lie in (0, 1), got {s0}")));
    }
    if !(t > 0.0) {
        return Err(Error::domain(format!("analysis time must be positive, got {t}")));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let s_hat = fit.survival_at(t);
    let var = fit.greenwood_variance_at(t);
    let z = statistic(kind, s_hat, var, s0);
    Ok(TestOutcome { s_hat, greenwood_var: var, z, reject: rejects(z, normal::upper_critical(alpha)) })
}

pub(crate) fn statistic(kind: TransformKind, s_hat: f64, var: f64, s0: f64) -> TestStatistic {
    if s_hat >= 1.0 {
        return TestStatistic::SurvivalOne;
    }
    if s_hat <= 0.0 || var <= 0.0 {
        return TestStatistic::SurvivalZero;
    }
    // Ŝ and s0 are strictly inside (0, 1) here, so every transform is defined.
    let g = |s: f64| kind.transform(s).expect("interior probability");
    let slope = kind.derivative(s_hat).expect("interior probability").abs();
    TestStatistic::Finite(kind.direction() * (g(s_hat) - g(s0)) / (slope * var.sqrt()))
}

pub(crate) fn rejects(z: TestStatistic, critical: f64) -> bool {
    match z {
        TestStatistic::Finite(z) => z > critical,
        TestStatistic::SurvivalOne => true,
        TestStatistic::SurvivalZero => false,
    }
}
