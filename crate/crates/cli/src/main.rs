use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use real_hardy::ToleranceConfig;
use real_hardy_cli::{error_json, run, CliError, Command, RunConfig, DEFAULT_CHECK_TOL, DEFAULT_GRID};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

/// Hardy-space solvers with JSON input and a JSON verification report.
///
/// Exit status: 0 when every check passes, 2 for a valid negative answer
/// (unsolvable interpolation data, non-contractive Toeplitz matrix), 1 on
/// errors and failed checks.
#[derive(Debug, Parser)]
#[command(name = "real-hardy", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input document; stdin when omitted.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Report destination; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Boundary sampling grid, a power of two in 16..=65536.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// Truncation degree, Szegő degree or subspace budget when the input
    /// does not set one.
    #[arg(long)]
    degree: Option<usize>,
    /// Equality and PSD tolerance used by the solvers.
    #[arg(long)]
    tol: Option<f64>,
    /// Tolerance for the checks listed in the report.
    #[arg(long, default_value_t = DEFAULT_CHECK_TOL)]
    check_tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn execute(args: &Args) -> Result<(String, i32), CliError> {
    let mut tolerances = ToleranceConfig::default();
    if let Some(t) = args.tol {
        tolerances.eq_tol = t;
        tolerances.psd_tol = t;
    }
    let config = RunConfig {
        grid_size: args.grid,
        tolerances,
        check_tol: args.check_tol,
        degree: args.degree,
        out: args.out.clone(),
    };
    let text = match &args.input {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let outcome = run(args.command, &text, &config)?;
    Ok((outcome.json.clone(), outcome.exit_code()))
}

fn emit(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let Format::Json = args.format;
    let (text, code) = match execute(&args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("real-hardy: {e}");
            (error_json(args.command, &e), 1)
        }
    };
    if let Err(e) = emit(args.out.as_ref(), &text) {
        eprintln!("real-hardy: cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
