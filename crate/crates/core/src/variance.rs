//! Asymptotic variance of the Kaplan-Meier estimate at a fixed time under a
//! parametric event law and the accrual/follow-up censoring scheme.
//!
//! σ²(t) = S(t)² ∫₀ᵗ λ(s) / {P(U > s) S(s)} ds
//!
//! With random censoring of cumulative hazard ρΛ the integrand is
//! λ(s) e^{(1+ρ)Λ(s)} / A(s), where A is the administrative term.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{adaptive_simpson, DEFAULT_MAX_DEPTH, DEFAULT_TOLERANCE};
use crate::surv_model::{CensoringScheme, Family, ParametricSurvival};
use crate::transforms::TransformKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarianceMethod {
    ClosedForm,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VarianceResult {
    /// S(t) of the event law the variance was computed for.
    pub survival: f64,
    /// Asymptotic variance of √n{Ŝ(t) - S(t)}.
    pub sigma2: f64,
    pub method: VarianceMethod,
    /// Quadrature error bound on `sigma2`; 0 for the closed form.
    pub est_abs_error: f64,
}

impl VarianceResult {
    /// τ² = g′(S)² σ².
    pub fn tau2(&self, kind: TransformKind) -> Result<f64> {
        let d = kind.derivative(self.survival)?;
        Ok(d * d * self.sigma2)
    }

    /// τ = |g′(S)| σ.
    pub fn tau(&self, kind: TransformKind) -> Result<f64> {
        Ok(kind.derivative(self.survival)?.abs() * self.sigma2.sqrt())
    }
}

pub fn asymptotic_variance(
    dist: &ParametricSurvival,
    scheme: &CensoringScheme,
    t: f64,
) -> Result<VarianceResult> {
    compute(dist, scheme, t, false)
}

/// Same quantity with every segment evaluated by quadrature, including those
/// that have a closed form. Used to cross-check the closed-form branch.
pub fn asymptotic_variance_by_quadrature(
    dist: &ParametricSurvival,
    scheme: &CensoringScheme,
    t: f64,
) -> Result<VarianceResult> {
    compute(dist, scheme, t, true)
}

fn compute(
    dist: &ParametricSurvival,
    scheme: &CensoringScheme,
    t: f64,
    force_quadrature: bool,
) -> Result<VarianceResult> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("analysis time must be positive, got {t}")));
    }
    let horizon = scheme.total();
    if t >= horizon {
        return Err(Error::DivergentIntegral { t, horizon });
    }
    let survival = dist.survival_at(t)?;
    if !(survival > 0.0 && survival < 1.0) {
        return Err(Error::domain(format!("S(t) = {survival} is not inside (0, 1)")));
    }

    let rho = scheme.hazard_ratio();
    let b = scheme.followup;
    let censor_free_head = scheme.random_fraction == 0.0;

    if censor_free_head && t <= b && !force_quadrature {
        return Ok(VarianceResult {
            survival,
            sigma2: survival * (1.0 - survival),
            method: VarianceMethod::ClosedForm,
            est_abs_error: 0.0,
        });
    }

    // Segment (0, min(t, b)]: P(U > s) = e^{-ρΛ(s)}. Substituting u = Λ(s)
    // removes the hazard singularity at 0 for shapes below 1.
    let head_end = t.min(b);
    let (head, head_err) = if censor_free_head && !force_quadrature {
        (1.0 / dist.survival_at(head_end)? - 1.0, 0.0)
    } else {
        let growth = 1.0 + rho;
        let r = adaptive_simpson(
            |u| (growth * u).exp(),
            0.0,
            dist.cumulative_hazard(head_end),
            DEFAULT_TOLERANCE,
            DEFAULT_MAX_DEPTH,
        )?;
        (r.value, r.error_bound)
    };

    // Segment (b, t]: administrative term (c - s)/a.
    let (tail, tail_err) = if t > b {
        let a = scheme.accrual;
        let growth = 1.0 + rho;
        let r = adaptive_simpson(
            |s| a / (horizon - s) * dist.hazard(s) * (growth * dist.cumulative_hazard(s)).exp(),
            b,
            t,
            DEFAULT_TOLERANCE,
            DEFAULT_MAX_DEPTH,
        )?;
        (r.value, r.error_bound)
    } else {
        (0.0, 0.0)
    };

    let s2 = survival * survival;
    Ok(VarianceResult {
        survival,
        sigma2: s2 * (head + tail),
        method: VarianceMethod::Quadrature,
        est_abs_error: s2 * (head_err + tail_err),
    })
}

/// τ = |g′{S(t)}| σ(t).
pub fn transformed_sd(
    kind: TransformKind,
    dist: &ParametricSurvival,
    scheme: &CensoringScheme,
    t: f64,
) -> Result<f64> {
    asymptotic_variance(dist, scheme, t)?.tau(kind)
}

/// Variance for the law of `family` whose survival at `t` is `s`.
pub fn variance_at_survival(
    family: Family,
    s: f64,
    scheme: &CensoringScheme,
    t: f64,
) -> Result<VarianceResult> {
    let dist = ParametricSurvival::from_survival_at(family, s, t)?;
    asymptotic_variance(&dist, scheme, t)
}

/// τ₀/τ₁ with σ² = S(1 - S) (no random censoring, t ≤ b).
pub fn tau_ratio(kind: TransformKind, s0: f64, s1: f64) -> Result<f64> {
    for s in [s0, s1] {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::domain(format!("survival probabilities must lie in (0, 1), got {s}")));
        }
    }
    let tau = |s: f64| -> Result<f64> { Ok(kind.derivative(s)?.abs() * (s * (1.0 - s)).sqrt()) };
    Ok(tau(s0)? / tau(s1)?)
}
