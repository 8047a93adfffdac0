//! Parametric event-time laws and the accrual/follow-up censoring scheme.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Event-time family. `Exponential` is the Weibull law with shape 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    #[serde(rename = "exp")]
    Exponential,
    Weibull { shape: f64 },
}

impl Family {
    pub fn weibull(shape: f64) -> Result<Self> {
        if shape.is_finite() && shape > 0.0 {
            Ok(Family::Weibull { shape })
        } else {
            Err(Error::domain(format!("Weibull shape must be positive, got {shape}")))
        }
    }

    pub fn shape(&self) -> f64 {
        match *self {
            Family::Exponential => 1.0,
            Family::Weibull { shape } => shape,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::Exponential => "exp".to_string(),
            Family::Weibull { shape } => format!("weibull({shape})"),
        }
    }
}

/// S(t) = exp{-(λt)^k}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametricSurvival {
    family: Family,
    rate: f64,
}

impl ParametricSurvival {
    pub fn new(family: Family, rate: f64) -> Result<Self> {
        if !(rate.is_finite() && rate > 0.0) {
            return Err(Error::domain(format!("rate must be positive, got {rate}")));
        }
        if let Family::Weibull { shape } = family {
            Family::weibull(shape)?;
        }
        Ok(Self { family, rate })
    }

    pub fn exponential(rate: f64) -> Result<Self> {
        Self::new(Family::Exponential, rate)
    }

    /// The law of the given family whose survival at `t` equals `s`.
    pub fn from_survival_at(family: Family, s: f64, t: f64) -> Result<Self> {
        Self::new(family, hazard_from_survival(family.shape(), s, t)?)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn shape(&self) -> f64 {
        self.family.shape()
    }

    /// Λ(t) = (λt)^k.
    pub fn cumulative_hazard(&self, t: f64) -> f64 {
        (self.rate * t).powf(self.shape())
    }

    /// λ(t) = kλ^k t^{k-1}.
    pub fn hazard(&self, t: f64) -> f64 {
        let k = self.shape();
        if k == 1.0 {
            return self.rate;
        }
        k * self.rate.powf(k) * t.powf(k - 1.0)
    }

    pub fn density(&self, t: f64) -> f64 {
        self.hazard(t) * (-self.cumulative_hazard(t)).exp()
    }

    pub fn survival_at(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::domain(format!("time must be non-negative, got {t}")));
        }
        Ok((-self.cumulative_hazard(t)).exp())
    }

    /// Inverse-CDF draw X = (-ln V)^{1/k} / λ.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        // V in (0, 1] so the logarithm is finite.
        let v = 1.0 - rng.random::<f64>();
        (-v.ln()).powf(1.0 / self.shape()) / self.rate
    }
}

/// Rate λ solving exp{-(λt)^k} = s, i.e. λ = {-log s}^{1/k} / t.
pub fn hazard_from_survival(shape: f64, s: f64, t: f64) -> Result<f64> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::domain(format!("survival target must lie in (0, 1), got {s}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("time must be positive, got {t}")));
    }
    if !(shape > 0.0 && shape.is_finite()) {
        return Err(Error::domain(format!("shape must be positive, got {shape}")));
    }
    Ok((-s.ln()).powf(1.0 / shape) / t)
}

/// Exponential rate with median `m`: λ = log 2 / m.
pub fn hazard_from_median(m: f64) -> Result<f64> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::domain(format!("median must be positive, got {m}")));
    }
    Ok(-(0.5f64).ln() / m)
}

/// Uniform accrual over `(0, accrual)`, analysis `followup` after accrual
/// closes, plus optional independent random censoring.
///
/// `random_fraction` p is the share of subjects whose random censoring time
/// precedes their event time. The random censoring law has cumulative hazard
/// `p / (1 - p)` times the event law's, so under proportional hazards exactly
/// a fraction p is censored first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CensoringScheme {
    pub accrual: f64,
    pub followup: f64,
    pub random_fraction: f64,
}

impl CensoringScheme {
    pub fn new(accrual: f64, followup: f64, random_fraction: f64) -> Result<Self> {
        if !(accrual > 0.0 && accrual.is_finite()) {
            return Err(Error::domain(format!("accrual must be positive, got {accrual}")));
        }
        if !(followup > 0.0 && followup.is_finite()) {
            return Err(Error::domain(format!("follow-up must be positive, got {followup}")));
        }
        if !(0.0..1.0).contains(&random_fraction) {
            return Err(Error::domain(format!(
                "random censoring fraction must lie in [0, 1), got {random_fraction}"
            )));
        }
        Ok(Self { accrual, followup, random_fraction })
    }

    /// Administrative censoring only.
    pub fn administrative(accrual: f64, followup: f64) -> Result<Self> {
        Self::new(accrual, followup, 0.0)
    }

    /// Study end c = a + b.
    pub fn total(&self) -> f64 {
        self.accrual + self.followup
    }

    /// ρ = p / (1 - p), the censoring-to-event cumulative hazard ratio.
    pub fn hazard_ratio(&self) -> f64 {
        self.random_fraction / (1.0 - self.random_fraction)
    }

    /// Probability that administrative censoring has not occurred by `t`:
    /// 1 on [0, b], (c - t)/a on (b, c], 0 after.
    pub fn admin_survival(&self, t: f64) -> f64 {
        if t <= self.followup {
            1.0
        } else if t <= self.total() {
            (self.total() - t) / self.accrual
        } else {
            0.0
        }
    }

    /// Random censoring law paired with `dist`: same family, cumulative
    /// hazard ρΛ(t). `None` when p = 0.
    pub fn random_censoring_law(&self, dist: &ParametricSurvival) -> Option<ParametricSurvival> {
        if self.random_fraction == 0.0 {
            return None;
        }
        let rate = dist.rate() * self.hazard_ratio().powf(1.0 / dist.shape());
        Some(ParametricSurvival { family: dist.family(), rate })
    }

    /// P(U > t) for the combined censoring time U.
    pub fn censoring_survival(&self, dist: &ParametricSurvival, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::domain(format!("time must be non-negative, got {t}")));
        }
        if t >= self.total() {
            return Err(Error::domain(format!(
                "censoring survival is zero at and after the study end {} (t = {t})",
                self.total()
            )));
        }
        let random = (-self.hazard_ratio() * dist.cumulative_hazard(t)).exp();
        Ok(random * self.admin_survival(t))
    }
}

/// Free-function form of [`CensoringScheme::censoring_survival`].
pub fn censoring_survival(scheme: &CensoringScheme, dist: &ParametricSurvival, t: f64) -> Result<f64> {
    scheme.censoring_survival(dist, t)
}

/// One subject's observed record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub time: f64,
    pub event: bool,
}

/// Combine already-drawn entry, event and random censoring times into the
/// observed record. The administrative horizon is `a + b - entry`; an event
/// tying with a censoring time counts as an event.
pub fn resolve_observation(
    scheme: &CensoringScheme,
    entry: f64,
    event_time: f64,
    censor_time: Option<f64>,
) -> Observation {
    let horizon = scheme.total() - entry;
    let censor = censor_time.map_or(horizon, |u| u.min(horizon));
    if event_time <= censor {
        Observation { time: event_time, event: true }
    } else {
        Observation { time: censor, event: false }
    }
}

/// Draw one subject. Draw order is fixed: entry time, event time, then the
/// random censoring time when p > 0.
pub fn sample_observation<R: Rng + ?Sized>(
    dist: &ParametricSurvival,
    scheme: &CensoringScheme,
    rng: &mut R,
) -> Observation {
    let entry = scheme.accrual * rng.random::<f64>();
    let event_time = dist.sample(rng);
    let censor_time = scheme.random_censoring_law(dist).map(|law| law.sample(rng));
    resolve_observation(scheme, entry, event_time, censor_time)
}
