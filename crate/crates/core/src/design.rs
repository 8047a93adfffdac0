//! Sample size and power for the one-sided transformed Kaplan-Meier test.
//!
//! Two formulas are offered. The proposed one uses the alternative's τ₁ on
//! both quantiles,
//!
//! n = ⌈{τ₁(z_{1-α} + z_{1-β}) / ε}²⌉,
//!
//! while the existing one mixes the null and alternative scales,
//!
//! n = ⌈{(τ₁ z_{1-α} + τ₀ z_{1-β}) / ε}²⌉.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normal;
use crate::surv_model::{CensoringScheme, Family};
use crate::transforms::TransformKind;
use crate::variance::variance_at_survival;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Proposed,
    Existing,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Proposed => "proposed",
            Method::Existing => "existing",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "proposed" => Ok(Method::Proposed),
            "existing" => Ok(Method::Existing),
            other => Err(Error::domain(format!("unknown method '{other}'"))),
        }
    }
}

/// A single-arm superiority design at analysis time `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignSpec {
    pub s0: f64,
    pub s1: f64,
    pub t: f64,
    pub alpha: f64,
    pub beta: f64,
    pub kind: TransformKind,
    pub scheme: CensoringScheme,
    pub family: Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignResult {
    pub kind: TransformKind,
    pub method: Method,
    pub n: u64,
    pub tau0: f64,
    pub tau1: f64,
    /// Effect size oriented so that it is positive under the alternative.
    pub epsilon: f64,
    /// Power of the generating formula at `n`.
    pub achieved_power: f64,
}

/// τ₀, τ₁ and the oriented effect for a validated spec.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignScales {
    pub tau0: f64,
    pub tau1: f64,
    pub epsilon: f64,
}

impl DesignSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        s0: f64,
        s1: f64,
        t: f64,
        alpha: f64,
        beta: f64,
        kind: TransformKind,
        scheme: CensoringScheme,
        family: Family,
    ) -> Result<Self> {
        let spec = Self { s0, s1, t, alpha, beta, kind, scheme, family };
        spec.validate()?;
        Ok(spec)
    }

    /// Same design with another transformation.
    pub fn with_kind(&self, kind: TransformKind) -> Self {
        Self { kind, ..*self }
    }

    pub fn power(&self) -> f64 {
        1.0 - self.beta
    }

    pub fn validate(&self) -> Result<()> {
        for (name, s) in [("s0", self.s0), ("s1", self.s1)] {
            if !(s > 0.0 && s < 1.0) {
                return Err(Error::domain(format!("{name} must lie in (0, 1), got {s}")));
            }
        }
        if self.s0 == self.s1 {
            return Err(Error::domain("null and alternative survival must differ"));
        }
        if !(self.t > 0.0 && self.t.is_finite()) {
            return Err(Error::domain(format!("analysis time must be positive, got {}", self.t)));
        }
        if self.t >= self.scheme.total() {
            return Err(Error::domain(format!(
                "analysis time {} must precede the study end {}",
                self.t,
                self.scheme.total()
            )));
        }
        if !(self.alpha > 0.0 && self.alpha < 0.5) {
            return Err(Error::domain(format!("alpha must lie in (0, 0.5), got {}", self.alpha)));
        }
        if !(self.beta > 0.0 && self.beta < 0.5) {
            return Err(Error::domain(format!(
                "power must lie in (0.5, 1), got {}",
                1.0 - self.beta
            )));
        }
        if let Family::Weibull { shape } = self.family {
            Family::weibull(shape)?;
        }
        if self.s1 < self.s0 {
            return Err(Error::domain(format!(
                "superiority design requires s1 > s0 (got s0 = {}, s1 = {})",
                self.s0, self.s1
            )));
        }
        Ok(())
    }

    /// ε̃ = direction · (g(s1) - g(s0)).
    pub fn oriented_effect(&self) -> Result<f64> {
        let k = self.kind;
        Ok(k.direction() * (k.transform(self.s1)? - k.transform(self.s0)?))
    }

    /// τ₀ and τ₁, each from the event law solved to its own survival target.
    pub fn scales(&self) -> Result<DesignScales> {
        self.validate()?;
        let tau0 = variance_at_survival(self.family, self.s0, &self.scheme, self.t)?.tau(self.kind)?;
        let tau1 = variance_at_survival(self.family, self.s1, &self.scheme, self.t)?.tau(self.kind)?;
        let epsilon = self.oriented_effect()?;
        if !(epsilon > 0.0) {
            return Err(Error::domain("oriented effect size must be positive"));
        }
        Ok(DesignScales { tau0, tau1, epsilon })
    }
}

/// Unrounded proposed sample size {τ₁(z_{1-α} + z_{1-β}) / ε}².
pub fn proposed_n_raw(tau1: f64, epsilon: f64, alpha: f64, beta: f64) -> f64 {
    let z = normal::upper_critical(alpha) + normal::upper_critical(beta);
    (tau1 * z / epsilon).powi(2)
}

/// Unrounded existing-method sample size {(τ₁ z_{1-α} + τ₀ z_{1-β}) / ε}².
pub fn existing_n_raw(tau0: f64, tau1: f64, epsilon: f64, alpha: f64, beta: f64) -> f64 {
    let num = tau1 * normal::upper_critical(alpha) + tau0 * normal::upper_critical(beta);
    (num / epsilon).powi(2)
}

pub fn proposed_power_raw(tau1: f64, epsilon: f64, alpha: f64, n: f64) -> f64 {
    normal::cdf(-normal::upper_critical(alpha) + epsilon * n.sqrt() / tau1)
}

pub fn existing_power_raw(tau0: f64, tau1: f64, epsilon: f64, alpha: f64, n: f64) -> f64 {
    normal::cdf(-(tau1 / tau0) * normal::upper_critical(alpha) + epsilon * n.sqrt() / tau0)
}

fn ceil_n(raw: f64) -> Result<u64> {
    if !raw.is_finite() || raw > u64::MAX as f64 {
        return Err(Error::domain(format!("sample size is not finite ({raw})")));
    }
    Ok((raw.ceil() as u64).max(1))
}

pub fn sample_size_proposed(spec: &DesignSpec) -> Result<DesignResult> {
    let sc = spec.scales()?;
    let n = ceil_n(proposed_n_raw(sc.tau1, sc.epsilon, spec.alpha, spec.beta))?;
    Ok(DesignResult {
        kind: spec.kind,
        method: Method::Proposed,
        n,
        tau0: sc.tau0,
        tau1: sc.tau1,
        epsilon: sc.epsilon,
        achieved_power: proposed_power_raw(sc.tau1, sc.epsilon, spec.alpha, n as f64),
    })
}

pub fn sample_size_existing(spec: &DesignSpec) -> Result<DesignResult> {
    let sc = spec.scales()?;
    let n = ceil_n(existing_n_raw(sc.tau0, sc.tau1, sc.epsilon, spec.alpha, spec.beta))?;
    Ok(DesignResult {
        kind: spec.kind,
        method: Method::Existing,
        n,
        tau0: sc.tau0,
        tau1: sc.tau1,
        epsilon: sc.epsilon,
        achieved_power: existing_power_raw(sc.tau0, sc.tau1, sc.epsilon, spec.alpha, n as f64),
    })
}

pub fn sample_size(spec: &DesignSpec, method: Method) -> Result<DesignResult> {
    match method {
        Method::Proposed => sample_size_proposed(spec),
        Method::Existing => sample_size_existing(spec),
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::domain("sample size must be at least 1"))
    } else {
        Ok(())
    }
}

/// Φ(-z_{1-α} + ε√n / τ₁).
pub fn power_proposed(spec: &DesignSpec, n: u64) -> Result<f64> {
    check_n(n)?;
    let sc = spec.scales()?;
    Ok(proposed_power_raw(sc.tau1, sc.epsilon, spec.alpha, n as f64))
}

/// Φ(-(τ₁/τ₀) z_{1-α} + ε√n / τ₀), the approximation behind the existing formula.
pub fn power_existing(spec: &DesignSpec, n: u64) -> Result<f64> {
    check_n(n)?;
    let sc = spec.scales()?;
    Ok(existing_power_raw(sc.tau0, sc.tau1, sc.epsilon, spec.alpha, n as f64))
}

pub fn power(spec: &DesignSpec, method: Method, n: u64) -> Result<f64> {
    match method {
        Method::Proposed => power_proposed(spec, n),
        Method::Existing => power_existing(spec, n),
    }
}

/// Power at every integer n in `lo..=hi`.
pub fn power_curve(spec: &DesignSpec, method: Method, lo: u64, hi: u64) -> Result<Vec<(u64, f64)>> {
    check_n(lo)?;
    let sc = spec.scales()?;
    Ok((lo..=hi)
        .map(|n| {
            let p = match method {
                Method::Proposed => proposed_power_raw(sc.tau1, sc.epsilon, spec.alpha, n as f64),
                Method::Existing => existing_power_raw(sc.tau0, sc.tau1, sc.epsilon, spec.alpha, n as f64),
            };
            (n, p)
        })
        .collect())
}
