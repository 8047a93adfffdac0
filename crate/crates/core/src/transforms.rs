//! Transformations of a survival probability used to build the test statistic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the five transformations g of the survival probability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    /// g(s) = s
    Identity,
    /// g(s) = log s
    Log,
    /// g(s) = log(-log s); the only decreasing variant.
    #[serde(rename = "loglog")]
    LogMinusLog,
    /// g(s) = log(s / (1 - s))
    Logit,
    /// g(s) = asin(√s)
    #[serde(rename = "arcsin")]
    ArcsineSqrt,
}

impl TransformKind {
    pub const ALL: [TransformKind; 5] = [
        TransformKind::Identity,
        TransformKind::Log,
        TransformKind::LogMinusLog,
        TransformKind::Logit,
        TransformKind::ArcsineSqrt,
    ];

    /// Canonical lowercase name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Identity => "identity",
            TransformKind::Log => "log",
            TransformKind::LogMinusLog => "loglog",
            TransformKind::Logit => "logit",
            TransformKind::ArcsineSqrt => "arcsin",
        }
    }

    /// Position in [`TransformKind::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    /// +1 when g is increasing, -1 when decreasing. Multiplying a difference
    /// of transformed values by this orients the effect so that better
    /// survival is positive.
    pub fn direction(self) -> f64 {
        match self {
            TransformKind::LogMinusLog => -1.0,
            _ => 1.0,
        }
    }

    /// g(s).
    pub fn transform(self, s: f64) -> Result<f64> {
        self.check_value_domain(s)?;
        Ok(match self {
            TransformKind::Identity => s,
            TransformKind::Log => s.ln(),
            TransformKind::LogMinusLog => (-s.ln()).ln(),
            TransformKind::Logit => (s / (1.0 - s)).ln(),
            TransformKind::ArcsineSqrt => s.sqrt().asin(),
        })
    }

    /// g′(s).
    pub fn derivative(self, s: f64) -> Result<f64> {
        self.check_derivative_domain(s)?;
        Ok(match self {
            TransformKind::Identity => 1.0,
            TransformKind::Log => 1.0 / s,
            TransformKind::LogMinusLog => 1.0 / (s * s.ln()),
            TransformKind::Logit => 1.0 / (s * (1.0 - s)),
            TransformKind::ArcsineSqrt => 1.0 / (4.0 * s * (1.0 - s)).sqrt(),
        })
    }

    fn check_value_domain(self, s: f64) -> Result<()> {
        let ok = match self {
            TransformKind::Identity | TransformKind::ArcsineSqrt => (0.0..=1.0).contains(&s),
            TransformKind::Log => s > 0.0 && s <= 1.0,
            TransformKind::LogMinusLog | TransformKind::Logit => s > 0.0 && s < 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(self.domain_error(s))
        }
    }

    fn check_derivative_domain(self, s: f64) -> Result<()> {
        let ok = match self {
            TransformKind::Identity => s.is_finite(),
            TransformKind::Log => s > 0.0 && s <= 1.0,
            _ => s > 0.0 && s < 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(self.domain_error(s))
        }
    }

    fn domain_error(self, s: f64) -> Error {
        Error::domain(format!("{} transformation is undefined at s = {s}", self.name()))
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "identity" | "ident" => Ok(TransformKind::Identity),
            "log" => Ok(TransformKind::Log),
            "loglog" | "log-log" | "cloglog" => Ok(TransformKind::LogMinusLog),
            "logit" => Ok(TransformKind::Logit),
            "arcsin" | "arcsine" | "asin" => Ok(TransformKind::ArcsineSqrt),
            other => Err(Error::domain(format!("unknown transformation '{other}'"))),
        }
    }
}
