//! Design and verification toolkit for single-arm survival trials whose
//! primary analysis is a one-sided test on a transformed Kaplan-Meier
//! estimate at a fixed analysis time.
//!
//! The crate is organised bottom-up:
//!
//! - [`surv_model`]: parametric event-time laws, the accrual/follow-up
//!   censoring scheme and per-subject sampling.
//! - [`transforms`]: the five transformations of the survival probability.
//! - [`variance`]: asymptotic variance of the Kaplan-Meier estimate under a
//!   censoring scheme (closed form or adaptive quadrature).
//! - [`design`]: sample size and power formulas.
//! - [`km`]: the product-limit estimator, Greenwood variance and the
//!   transformed one-sided test.
//! - [`mcsim`] and [`tables`]: the seeded, parallel Monte Carlo engine and
//!   the scenario grids it iterates.

// Argument checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod design;
pub mod error;
pub mod km;
pub mod mcsim;
pub mod normal;
pub mod quadrature;
pub mod rng;
pub mod surv_model;
pub mod tables;
pub mod transforms;
pub mod variance;

pub use design::{DesignResult, DesignSpec, Method};
pub use error::{Error, Result};
pub use km::{KmFit, SurvivalSample, TestOutcome, TestStatistic};
pub use mcsim::{Scenario, SimResult, Truth};
pub use surv_model::{CensoringScheme, Family, ParametricSurvival};
pub use tables::{CellSelection, TableId, TableRow};
pub use transforms::TransformKind;
pub use variance::{VarianceMethod, VarianceResult};
