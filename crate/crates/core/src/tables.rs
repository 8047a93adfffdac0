//! Scenario grids for the type I error and power tables, and the row records
//! emitted when a grid is run.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::design::{self, DesignSpec, Method};
use crate::error::{Error, Result};
use crate::mcsim::{self, Scenario};
use crate::rng::mix64;
use crate::surv_model::{CensoringScheme, Family};
use crate::transforms::TransformKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    T1,
    T2,
    T3,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
}

impl TableId {
    pub const ALL: [TableId; 10] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::S1,
        TableId::S2,
        TableId::S3,
        TableId::S4,
        TableId::S5,
        TableId::S6,
        TableId::S7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::T1 => "T1",
            TableId::T2 => "T2",
            TableId::T3 => "T3",
            TableId::S1 => "S1",
            TableId::S2 => "S2",
            TableId::S3 => "S3",
            TableId::S4 => "S4",
            TableId::S5 => "S5",
            TableId::S6 => "S6",
            TableId::S7 => "S7",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TableId::T1 => "type I error, administrative censoring",
            TableId::S1 => "type I error, with 20% random censoring",
            TableId::T2 => "power, exponential, alpha 0.05, power 0.8, with and without random censoring",
            TableId::T3 => "power for the three clinical study presets",
            TableId::S2 => "power, exponential, no random censoring",
            TableId::S3 => "power, Weibull k = 0.5, no random censoring",
            TableId::S4 => "power, Weibull k = 2, no random censoring",
            TableId::S5 => "power, exponential, random censoring",
            TableId::S6 => "power, Weibull k = 0.5, random censoring",
            TableId::S7 => "power, Weibull k = 2, random censoring",
        }
    }

    /// Type I error tables simulate null scenarios at fixed n.
    pub fn is_type_one(self) -> bool {
        matches!(self, TableId::T1 | TableId::S1)
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown table id '{s}'")))
    }
}

/// A clinical study preset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StudyPreset {
    pub study: &'static str,
    pub endpoint: &'static str,
    pub s0: f64,
    pub s1: f64,
    pub t: f64,
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub power: f64,
    /// Sample size the study itself planned or enrolled.
    pub actual_n: u64,
}

pub const PRESETS: [StudyPreset; 3] = [
    StudyPreset {
        study: "i",
        endpoint: "progression-free survival",
        s0: 0.50,
        s1: 0.70,
        t: 3.0,
        a: 22.0,
        b: 4.0,
        alpha: 0.05,
        power: 0.90,
        actual_n: 50,
    },
    StudyPreset {
        study: "ii",
        endpoint: "overall survival",
        s0: 0.40,
        s1: 0.55,
        t: 18.0,
        a: 27.0,
        b: 18.0,
        alpha: 0.05,
        power: 0.82,
        actual_n: 70,
    },
    StudyPreset {
        study: "iii",
        endpoint: "progression-free survival",
        s0: 0.25,
        s1: 0.50,
        t: 6.0,
        a: 23.0,
        b: 6.0,
        alpha: 0.05,
        power: 0.90,
        actual_n: 37,
    },
];

impl StudyPreset {
    pub fn spec(&self, kind: TransformKind) -> Result<DesignSpec> {
        DesignSpec::new(
            self.s0,
            self.s1,
            self.t,
            self.alpha,
            1.0 - self.power,
            kind,
            CensoringScheme::administrative(self.a, self.b)?,
            Family::Exponential,
        )
    }
}

/// The six columns of a power table: five transformations under the proposed
/// formula plus log under the existing formula.
pub const POWER_COLUMNS: [(TransformKind, Method); 6] = [
    (TransformKind::Identity, Method::Proposed),
    (TransformKind::Log, Method::Proposed),
    (TransformKind::Log, Method::Existing),
    (TransformKind::LogMinusLog, Method::Proposed),
    (TransformKind::Logit, Method::Proposed),
    (TransformKind::ArcsineSqrt, Method::Proposed),
];

/// Column names matching [`POWER_COLUMNS`].
pub const COLUMN_NAMES: [&str; 6] = ["identity", "log", "log_existing", "loglog", "logit", "arcsin"];

const ANALYSIS_TIME: f64 = 12.0;
const ACCRUAL: f64 = 24.0;
const RANDOM_FRACTION: f64 = 0.2;

/// One cell of a table grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    TypeOne { family: Family, censor_fraction: f64, n: u64, s0: f64 },
    Power { spec: DesignSpec, study: Option<&'static str> },
}

impl Cell {
    fn family(&self) -> Family {
        match self {
            Cell::TypeOne { family, .. } => *family,
            Cell::Power { spec, .. } => spec.family,
        }
    }
}

fn families() -> [Family; 3] {
    [Family::Exponential, Family::Weibull { shape: 0.5 }, Family::Weibull { shape: 2.0 }]
}

fn power_cell(family: Family, p: f64, b: f64, s0: f64, alpha: f64, power: f64) -> Result<Cell> {
    let s1 = ((s0 + 0.1) * 10.0).round() / 10.0;
    let spec = DesignSpec::new(
        s0,
        s1,
        ANALYSIS_TIME,
        alpha,
        1.0 - power,
        TransformKind::Identity,
        CensoringScheme::new(ACCRUAL, b, p)?,
        family,
    )?;
    Ok(Cell::Power { spec, study: None })
}

fn supplementary_power_grid(family: Family, p: f64) -> Result<Vec<Cell>> {
    let mut cells = Vec::with_capacity(24);
    for b in [12.0, 6.0] {
        for s0 in [0.1, 0.4, 0.7] {
            for (alpha, power) in [(0.05, 0.8), (0.10, 0.8), (0.05, 0.9), (0.10, 0.9)] {
                cells.push(power_cell(family, p, b, s0, alpha, power)?);
            }
        }
    }
    Ok(cells)
}

/// The scenario grid of a table, in reference row order.
pub fn grid(id: TableId) -> Result<Vec<Cell>> {
    match id {
        TableId::T1 | TableId::S1 => {
            let censor_fraction = if id == TableId::T1 { 0.0 } else { RANDOM_FRACTION };
            let mut cells = Vec::with_capacity(45);
            for family in families() {
                for n in [25, 50, 100] {
                    for s0 in [0.1, 0.3, 0.5, 0.7, 0.9] {
                        cells.push(Cell::TypeOne { family, censor_fraction, n, s0 });
                    }
                }
            }
            Ok(cells)
        }
        TableId::T2 => {
            let mut cells = Vec::with_capacity(12);
            for p in [0.0, RANDOM_FRACTION] {
                for b in [12.0, 6.0] {
                    for s0 in [0.1, 0.4, 0.7] {
                        cells.push(power_cell(Family::Exponential, p, b, s0, 0.05, 0.8)?);
                    }
                }
            }
            Ok(cells)
        }
        TableId::T3 => PRESETS
            .iter()
            .map(|p| Ok(Cell::Power { spec: p.spec(TransformKind::Identity)?, study: Some(p.study) }))
            .collect(),
        TableId::S2 => supplementary_power_grid(Family::Exponential, 0.0),
        TableId::S3 => supplementary_power_grid(Family::Weibull { shape: 0.5 }, 0.0),
        TableId::S4 => supplementary_power_grid(Family::Weibull { shape: 2.0 }, 0.0),
        TableId::S5 => supplementary_power_grid(Family::Exponential, RANDOM_FRACTION),
        TableId::S6 => supplementary_power_grid(Family::Weibull { shape: 0.5 }, RANDOM_FRACTION),
        TableId::S7 => supplementary_power_grid(Family::Weibull { shape: 2.0 }, RANDOM_FRACTION),
    }
}

/// Which cells to run and whether to simulate.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum CellSelection {
    #[default]
    All,
    /// Every cell, deterministic columns only.
    DesignOnly,
    /// Zero-based row indices.
    Rows(Vec<usize>),
}

impl FromStr for CellSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all" | "" => Ok(CellSelection::All),
            "design-only" | "design_only" => Ok(CellSelection::DesignOnly),
            list => list
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::domain(format!("invalid cell index '{p}'")))
                })
                .collect::<Result<Vec<_>>>()
                .map(CellSelection::Rows),
        }
    }
}

/// One emitted row. Sample-size and rate columns follow [`COLUMN_NAMES`];
/// type I error rows leave `log_existing` empty and repeat their fixed n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub table: String,
    pub row: usize,
    pub study: Option<String>,
    pub family: String,
    pub shape: f64,
    pub censor_fraction: f64,
    pub t: f64,
    pub a: f64,
    pub b: f64,
    pub s0: f64,
    pub s1: Option<f64>,
    pub alpha: f64,
    pub power: Option<f64>,
    pub n_identity: Option<u64>,
    pub n_log: Option<u64>,
    pub n_log_existing: Option<u64>,
    pub n_loglog: Option<u64>,
    pub n_logit: Option<u64>,
    pub n_arcsin: Option<u64>,
    pub p_identity: Option<f64>,
    pub p_log: Option<f64>,
    pub p_log_existing: Option<f64>,
    pub p_loglog: Option<f64>,
    pub p_logit: Option<f64>,
    pub p_arcsin: Option<f64>,
    pub reps: Option<u64>,
    pub seed: Option<u64>,
}

impl TableRow {
    pub fn sample_sizes(&self) -> [Option<u64>; 6] {
        [self.n_identity, self.n_log, self.n_log_existing, self.n_loglog, self.n_logit, self.n_arcsin]
    }

    pub fn rates(&self) -> [Option<f64>; 6] {
        [self.p_identity, self.p_log, self.p_log_existing, self.p_loglog, self.p_logit, self.p_arcsin]
    }

    fn set_sample_sizes(&mut self, n: [Option<u64>; 6]) {
        [self.n_identity, self.n_log, self.n_log_existing, self.n_loglog, self.n_logit, self.n_arcsin] = n;
    }

    fn set_rates(&mut self, p: [Option<f64>; 6]) {
        [self.p_identity, self.p_log, self.p_log_existing, self.p_loglog, self.p_logit, self.p_arcsin] = p;
    }
}

/// Settings for [`run_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub reps: u64,
    pub seed: u64,
    pub workers: usize,
    pub cells: CellSelection,
}

/// Run a table grid. Each simulated cell uses the stream family
/// `mix64(seed, row)`; the reported seed is the base seed.
pub fn run_table(id: TableId, config: &RunConfig) -> Result<Vec<TableRow>> {
    let simulate = config.cells != CellSelection::DesignOnly;
    if simulate && config.reps == 0 {
        return Err(Error::domain("replications must be at least 1"));
    }
    let cells = grid(id)?;
    let rows: Vec<usize> = match &config.cells {
        CellSelection::Rows(rows) => {
            if let Some(&bad) = rows.iter().find(|&&r| r >= cells.len()) {
                return Err(Error::domain(format!("table {id} has {} rows; index {bad} is out of range", cells.len())));
            }
            rows.clone()
        }
        _ => (0..cells.len()).collect(),
    };
    rows.into_iter()
        .map(|row| run_cell(id, row, &cells[row], config, simulate))
        .collect()
}

fn run_cell(id: TableId, row: usize, cell: &Cell, config: &RunConfig, simulate: bool) -> Result<TableRow> {
    let family = cell.family();
    let cell_seed = mix64(config.seed, row as u64);
    let mut out = match cell {
        Cell::TypeOne { censor_fraction, s0, .. } => TableRow {
            table: id.name().to_string(),
            row,
            study: None,
            family: family_name(family),
            shape: family.shape(),
            censor_fraction: *censor_fraction,
            t: ANALYSIS_TIME,
            a: ACCRUAL,
            b: 12.0,
            s0: *s0,
            s1: None,
            alpha: 0.05,
            power: None,
            ..empty_row()
        },
        Cell::Power { spec, study } => TableRow {
            table: id.name().to_string(),
            row,
            study: study.map(str::to_string),
            family: family_name(family),
            shape: family.shape(),
            censor_fraction: spec.scheme.random_fraction,
            t: spec.t,
            a: spec.scheme.accrual,
            b: spec.scheme.followup,
            s0: spec.s0,
            s1: Some(spec.s1),
            alpha: spec.alpha,
            power: Some(spec.power()),
            ..empty_row()
        },
    };

    match cell {
        Cell::TypeOne { family, censor_fraction, n, s0 } => {
            let mut sizes = [Some(*n); 6];
            sizes[2] = None;
            out.set_sample_sizes(sizes);
            if simulate {
                let scheme = CensoringScheme::new(ACCRUAL, 12.0, *censor_fraction)?;
                let scenario = Scenario::null(*family, *s0, ANALYSIS_TIME, scheme, 0.05, *n);
                let sim = mcsim::simulate(&scenario, config.reps, cell_seed, config.workers)?;
                let r = TransformKind::ALL.map(|k| Some(sim.p_hat(k)));
                out.set_rates([r[0], r[1], None, r[2], r[3], r[4]]);
            }
        }
        Cell::Power { spec, .. } => {
            let mut sizes = [None; 6];
            let mut rates = [None; 6];
            for (i, (kind, method)) in POWER_COLUMNS.into_iter().enumerate() {
                let spec = spec.with_kind(kind);
                let design = design::sample_size(&spec, method)?;
                sizes[i] = Some(design.n);
                if simulate {
                    let sim = mcsim::simulate(&Scenario::alternative(&spec, design.n), config.reps, cell_seed, config.workers)?;
                    rates[i] = Some(sim.p_hat(kind));
                }
            }
            out.set_sample_sizes(sizes);
            out.set_rates(rates);
        }
    }
    if simulate {
        out.reps = Some(config.reps);
        out.seed = Some(config.seed);
    }
    Ok(out)
}

fn family_name(family: Family) -> String {
    match family {
        Family::Exponential => "exp".to_string(),
        Family::Weibull { .. } => "weibull".to_string(),
    }
}

fn empty_row() -> TableRow {
    TableRow {
        table: String::new(),
        row: 0,
        study: None,
        family: String::new(),
        shape: 1.0,
        censor_fraction: 0.0,
        t: 0.0,
        a: 0.0,
        b: 0.0,
        s0: 0.0,
        s1: None,
        alpha: 0.0,
        power: None,
        n_identity: None,
        n_log: None,
        n_log_existing: None,
        n_loglog: None,
        n_logit: None,
        n_arcsin: None,
        p_identity: None,
        p_log: None,
        p_log_existing: None,
        p_loglog: None,
        p_logit: None,
        p_arcsin: None,
        reps: None,
        seed: None,
    }
}
