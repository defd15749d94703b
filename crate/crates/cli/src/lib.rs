//! JSON batch front end for the `real-hardy` solvers.
//!
//! Each subcommand reads one JSON document, runs a solver, re-checks the
//! invariants that apply to its output, and writes a JSON report. Exit status
//! is 0 when every check passes, 2 for a valid negative answer (infeasible
//! interpolation data, a non-contractive Toeplitz matrix) and 1 otherwise.

mod commands;
mod format;

use std::path::PathBuf;

use clap::ValueEnum;
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use real_hardy::ToleranceConfig;

pub use format::to_json_string;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Factorize,
    Riesz,
    Np,
    Cf,
    Szego,
    Subspace,
    Verify,
}

pub const MIN_GRID: usize = 16;
pub const MAX_GRID: usize = 1 << 16;
pub const DEFAULT_GRID: usize = 4096;
pub const DEFAULT_CHECK_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    /// Sampling grid for boundary checks and for weights given as polynomials.
    pub grid_size: usize,
    pub tolerances: ToleranceConfig,
    /// Tolerance applied to the post-solve checks in the report.
    pub check_tol: f64,
    /// Truncation degree, budget or Szegő degree, when the input omits it.
    pub degree: Option<usize>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid_size: DEFAULT_GRID,
            tolerances: ToleranceConfig::default(),
            check_tol: DEFAULT_CHECK_TOL,
            degree: None,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let m = self.grid_size;
        if !m.is_power_of_two() || !(MIN_GRID..=MAX_GRID).contains(&m) {
            return Err(CliError::Config(format!(
                "grid size {m} must be a power of two between {MIN_GRID} and {MAX_GRID}"
            )));
        }
        if !(self.check_tol > 0.0 && self.check_tol.is_finite()) {
            return Err(CliError::Config(format!("check tolerance {} must be positive", self.check_tol)));
        }
        self.tolerances.validate()?;
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Solver(#[from] real_hardy::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Schema { .. } => "schema",
            CliError::Config(_) => "config",
            CliError::Solver(_) => "solver",
            CliError::Io(_) => "io",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// A check failed; reported with exit status 1.
    CheckFailed,
    NotSolvable,
    NotContraction,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::CheckFailed => 1,
            Status::NotSolvable | Status::NotContraction => 2,
        }
    }
}

/// One post-solve check: `value ≤ tolerance` when both are present.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub value: Option<f64>,
    pub tolerance: Option<f64>,
}

impl Check {
    pub fn at_most(name: &'static str, value: f64, tolerance: f64) -> Self {
        Check {
            name,
            pass: value <= tolerance,
            value: Some(value),
            tolerance: Some(tolerance),
        }
    }

    pub fn flag(name: &'static str, pass: bool) -> Self {
        Check {
            name,
            pass,
            value: None,
            tolerance: None,
        }
    }
}

#[derive(Debug, Serialize)]
struct Report<'a, I, O> {
    command: Command,
    status: Status,
    config: &'a RunConfig,
    input: &'a I,
    output: O,
    checks: Vec<Check>,
}

/// Rendered report together with the process exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub json: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

pub(crate) fn render<I: Serialize, O: Serialize>(
    command: Command,
    config: &RunConfig,
    input: &I,
    output: O,
    checks: Vec<Check>,
    negative: Option<Status>,
) -> Outcome {
    let status = negative.unwrap_or(if checks.iter().all(|c| c.pass) {
        Status::Pass
    } else {
        Status::CheckFailed
    });
    let json = to_json_string(&Report {
        command,
        status,
        config,
        input,
        output,
        checks,
    });
    Outcome { status, json }
}

pub(crate) fn parse<T: DeserializeOwned>(input: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(input);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Schema {
            path,
            message: e.into_inner().to_string(),
        }
    })
}

/// Runs one subcommand on a JSON document.
pub fn run(command: Command, input: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    match command {
        Command::Factorize => commands::factorize(parse(input)?, config),
        Command::Riesz => commands::riesz(parse(input)?, config),
        Command::Np => commands::np(parse(input)?, config),
        Command::Cf => commands::cf(parse(input)?, config),
        Command::Szego => commands::szego(parse(input)?, config),
        Command::Subspace => commands::subspace(parse(input)?, config),
        Command::Verify => commands::verify(parse(input)?, config),
    }
}

/// Report written for a failed run.
pub fn error_json(command: Command, err: &CliError) -> String {
    #[derive(Serialize)]
    struct ErrorBody<'a> {
        kind: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        path: Option<&'a str>,
        message: String,
    }
    #[derive(Serialize)]
    struct ErrorReport<'a> {
        command: Command,
        status: &'static str,
        error: ErrorBody<'a>,
    }
    let path = match err {
        CliError::Schema { path, .. } => Some(path.as_str()),
        _ => None,
    };
    to_json_string(&ErrorReport {
        command,
        status: "error",
        error: ErrorBody {
            kind: err.kind(),
            path,
            message: err.to_string(),
        },
    })
}
