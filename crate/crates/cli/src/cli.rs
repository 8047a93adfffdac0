//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use kmdesign_core::design::Method;
use kmdesign_core::mcsim::{Truth, DEFAULT_REPS};
use kmdesign_core::tables::{run_table, RunConfig, COLUMN_NAMES};
use kmdesign_core::{CellSelection, TableId, TableRow, TransformKind};
use serde::Serialize;

use crate::api::{self, DesignRequest, FamilyName, PowerRequest, SimulateRequest};
use crate::error::ApiError;

#[derive(Debug, Parser)]
#[command(name = "kmdesign", version, about = "Sample size, power and simulation for single-arm Kaplan-Meier survival designs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample size per transformation.
    N(DesignArgs),
    /// Power at a fixed sample size.
    Power {
        #[command(flatten)]
        design: DesignArgs,
        #[arg(long)]
        n: u64,
    },
    /// Monte Carlo rejection rates for a design.
    Simulate(SimulateArgs),
    /// Reproduce a simulation table.
    Table(TableArgs),
    /// List the clinical study presets.
    Presets {
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        out: OutFormat,
    },
    /// Start the HTTP service.
    Serve {
        #[arg(long, env = "KMDESIGN_PORT", default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Proposed,
    Existing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Exp,
    Weibull,
}

/// A single transformation, or `None` for all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformArg(pub Option<TransformKind>);

fn parse_transform(s: &str) -> Result<TransformArg, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(TransformArg(None));
    }
    s.parse::<TransformKind>()
        .map(|k| TransformArg(Some(k)))
        .map_err(|_| format!("expected one of identity, log, loglog, logit, arcsin, all; got '{s}'"))
}

#[derive(Debug, Clone, Args)]
pub struct DesignArgs {
    #[arg(long)]
    pub s0: f64,
    #[arg(long)]
    pub s1: f64,
    /// Analysis time.
    #[arg(long)]
    pub t: f64,
    #[arg(long)]
    pub accrual: f64,
    /// Follow-up after the end of accrual.
    #[arg(long)]
    pub fup: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.8)]
    pub power: f64,
    #[arg(long, default_value = "all", value_parser = parse_transform)]
    pub transform: TransformArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Proposed)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = FamilyArg::Exp)]
    pub family: FamilyArg,
    /// Weibull shape; required with --family weibull.
    #[arg(long)]
    pub shape: Option<f64>,
    /// Fraction of subjects lost to random censoring.
    #[arg(long = "censor-frac", default_value_t = 0.0)]
    pub censor_frac: f64,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub out: OutFormat,
}

impl DesignArgs {
    fn check(&self) -> Result<(), clap::Error> {
        let mut cmd = Cli::command();
        match (self.family, self.shape) {
            (FamilyArg::Weibull, None) => {
                Err(cmd.error(ErrorKind::MissingRequiredArgument, "--family weibull requires --shape"))
            }
            (FamilyArg::Exp, Some(_)) => {
                Err(cmd.error(ErrorKind::ArgumentConflict, "--shape can only be used with --family weibull"))
            }
            _ => Ok(()),
        }
    }

    fn request(&self) -> DesignRequest {
        DesignRequest {
            s0: self.s0,
            s1: self.s1,
            t: self.t,
            accrual: self.accrual,
            followup: self.fup,
            alpha: self.alpha,
            power: self.power,
            family: match self.family {
                FamilyArg::Exp => FamilyName::Exp,
                FamilyArg::Weibull => FamilyName::Weibull,
            },
            shape: self.shape,
            censor_fraction: self.censor_frac,
            method: match self.method {
                MethodArg::Proposed => Method::Proposed,
                MethodArg::Existing => Method::Existing,
            },
            kinds: self.transform.0.map(|k| vec![k]),
            curve: false,
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub design: DesignArgs,
    /// Sample size for every transformation; each design's own n when omitted.
    #[arg(long)]
    pub n: Option<u64>,
    /// Generate data under the null (type I error) instead of the alternative.
    #[arg(long)]
    pub null: bool,
    #[arg(long, default_value_t = DEFAULT_REPS)]
    pub reps: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = default_workers())]
    pub workers: usize,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = |s: &str| s.parse::<TableId>().map_err(|e| e.to_string()))]
    pub id: TableId,
    #[arg(long, default_value_t = DEFAULT_REPS)]
    pub reps: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = default_workers())]
    pub workers: usize,
    /// `all`, `design-only`, or comma-separated zero-based row indices.
    #[arg(long, default_value = "all", value_parser = |s: &str| s.parse::<CellSelection>().map_err(|e| e.to_string()))]
    pub cells: CellSelection,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub out: OutFormat,
}

/// Run the CLI on `args` (including the program name). Returns the process
/// exit code: 0 on success, 1 for domain errors, 2 for unusable arguments.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return report_clap(e, out, err),
    };
    let checked = match &cli.command {
        Command::N(d) | Command::Power { design: d, .. } => d.check(),
        Command::Simulate(s) => s.design.check(),
        _ => Ok(()),
    };
    if let Err(e) = checked {
        return report_clap(e, out, err);
    }
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Api(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn report_clap(e: clap::Error, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = e.render().to_string();
    if e.use_stderr() {
        let _ = write!(err, "{text}");
    } else {
        let _ = write!(out, "{text}");
    }
    e.exit_code()
}

#[derive(Debug)]
enum CliError {
    Api(ApiError),
    Io(std::io::Error),
}

impl From<ApiError> for CliError {
    fn from(e: ApiError) -> Self {
        CliError::Api(e)
    }
}

impl From<kmdesign_core::Error> for CliError {
    fn from(e: kmdesign_core::Error) -> Self {
        CliError::Api(e.into())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::N(d) => {
            let resp = api::sample_size(&d.request())?;
            match d.out {
                OutFormat::Json => write_json(out, &resp)?,
                OutFormat::Csv => write_csv(out, &resp.results)?,
                OutFormat::Text => {
                    writeln!(out, "{}", describe(&resp.inputs))?;
                    for r in &resp.results {
                        writeln!(
                            out,
                            "{:<9} n={:<6} tau0={:.6} tau1={:.6} epsilon={:.6} power={:.6}",
                            r.kind.name(), r.n, r.tau0, r.tau1, r.epsilon, r.achieved_power
                        )?;
                    }
                }
            }
        }
        Command::Power { design, n } => {
            let resp = api::power(&PowerRequest { design: design.request(), n })?;
            match design.out {
                OutFormat::Json => write_json(out, &resp)?,
                OutFormat::Csv => write_csv(out, &resp.results)?,
                OutFormat::Text => {
                    writeln!(out, "{}", describe(&resp.inputs.design))?;
                    for r in &resp.results {
                        writeln!(out, "{:<9} n={:<6} power={:.6}", r.kind.name(), r.n, r.power)?;
                    }
                }
            }
        }
        Command::Simulate(s) => {
            let req = SimulateRequest {
                design: s.design.request(),
                n: s.n,
                truth: if s.null { Truth::Null } else { Truth::Alternative },
                reps: s.reps,
                seed: s.seed,
                workers: s.workers,
            };
            let resp = api::simulate(&req)?;
            match s.design.out {
                OutFormat::Json => write_json(out, &resp)?,
                OutFormat::Csv => write_csv(out, &resp.results)?,
                OutFormat::Text => {
                    writeln!(out, "{}", describe(&resp.inputs.design))?;
                    let truth = if s.null { "null" } else { "alternative" };
                    writeln!(out, "truth={truth} reps={} seed={}", resp.inputs.reps, resp.inputs.seed)?;
                    for r in &resp.results {
                        writeln!(
                            out,
                            "{:<9} n={:<6} rejections={:<8} p_hat={:.4} mc_se={:.4}",
                            r.kind.name(), r.n, r.rejections, r.p_hat, r.mc_se
                        )?;
                    }
                }
            }
        }
        Command::Table(t) => {
            let config = RunConfig { reps: t.reps, seed: t.seed, workers: t.workers, cells: t.cells.clone() };
            let rows = run_table(t.id, &config)?;
            match t.out {
                OutFormat::Json => write_json(out, &rows)?,
                OutFormat::Csv => write_csv(out, &rows)?,
                OutFormat::Text => write_table_text(out, t.id, &rows)?,
            }
        }
        Command::Presets { out: format } => {
            let presets = api::presets();
            match format {
                OutFormat::Json => write_json(out, &presets)?,
                OutFormat::Csv => write_csv(out, &presets)?,
                OutFormat::Text => {
                    for p in &presets {
                        writeln!(
                            out,
                            "({}) {}: s0={} s1={} t={} a={} b={} alpha={} power={} planned n={}",
                            p.study, p.endpoint, p.s0, p.s1, p.t, p.a, p.b, p.alpha, p.power, p.actual_n
                        )?;
                    }
                }
            }
        }
        Command::Serve { port } => {
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(crate::server::serve(port))?;
        }
    }
    Ok(())
}

fn describe(d: &DesignRequest) -> String {
    let family = match d.family {
        FamilyName::Exp => "exp".to_string(),
        FamilyName::Weibull => format!("weibull(shape={})", d.shape.unwrap_or(1.0)),
    };
    format!(
        "s0={} s1={} t={} accrual={} followup={} alpha={} power={} family={} censor_fraction={} method={}",
        d.s0, d.s1, d.t, d.accrual, d.followup, d.alpha, d.power, family, d.censor_fraction, d.method
    )
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn write_table_text(out: &mut dyn Write, id: TableId, rows: &[TableRow]) -> Result<(), CliError> {
    writeln!(out, "table {id}: {}", id.description())?;
    let mut header = format!("{:>4} {:>5} {:>8} {:>5} {:>5} {:>5} {:>5} {:>5}", "row", "fam", "shape", "p", "b", "s0", "s1", "alpha");
    header.push_str(&format!(" {:>5}", "power"));
    for name in COLUMN_NAMES {
        header.push_str(&format!(" {:>12}", format!("n_{name}")));
    }
    for name in COLUMN_NAMES {
        header.push_str(&format!(" {:>12}", format!("p_{name}")));
    }
    writeln!(out, "{header}")?;
    let opt = |v: Option<f64>, digits: usize| v.map_or("-".to_string(), |x| format!("{x:.digits$}"));
    for r in rows {
        let mut line = format!(
            "{:>4} {:>5} {:>8} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5}",
            r.row,
            r.family,
            r.shape,
            r.censor_fraction,
            r.b,
            r.s0,
            opt(r.s1, 2),
            r.alpha,
            opt(r.power, 2)
        );
        for n in r.sample_sizes() {
            line.push_str(&format!(" {:>12}", n.map_or("-".to_string(), |n| n.to_string())));
        }
        for p in r.rates() {
            line.push_str(&format!(" {:>12}", opt(p, 4)));
        }
        writeln!(out, "{line}")?;
    }
    if let Some(reps) = rows.first().and_then(|r| r.reps) {
        writeln!(out, "reps={reps} seed={}", rows[0].seed.unwrap_or_default())?;
    }
    Ok(())
}
