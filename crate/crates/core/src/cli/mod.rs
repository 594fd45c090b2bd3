//! The `simplexwidth` command line.
//!
//! Exit codes: 0 success, 1 failed check or computation, 2 usage error.

mod format;
pub mod verify;

use std::io::{self, IsTerminal, Write};

use clap::{Parser, Subcommand, ValueEnum};

pub use format::{format_decimal, TableRow, CSV_COLUMNS, CSV_NUMERIC_COLUMNS, SIGNIFICANT_DIGITS};

use crate::closed_form::{width_squared, SimplexKind};
use crate::directions::{enumerate_optimal_directions, is_optimal_direction};
use crate::error::Error;
use crate::geometry::{regular_simplex_vertices, standard_simplex_vertices};
use crate::optimizer::{minimize_width, OptimizerConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const TABLE_MAX_N: usize = 10_000;
const TABLE_NUMERIC_MAX_N: usize = 100;

#[derive(Debug, Parser)]
#[command(
    name = "simplexwidth",
    version,
    about = "Widths, radii and optimal directions of regular simplices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Standard,
    Regular,
}

impl From<Kind> for SimplexKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Standard => SimplexKind::Standard,
            Kind::Regular => SimplexKind::Regular,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form widths and radii for n = 1..max-n, one row per n.
    Table {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Also minimize the width numerically and report the error.
        #[arg(long = "include-numeric")]
        include_numeric: bool,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Width of one simplex.
    Width {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "regular")]
        kind: Kind,
        /// Print the squared width as an exact fraction.
        #[arg(long)]
        exact: bool,
    },
    /// Minimize the projection width of D_n numerically.
    Optimize {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// The optimal direction family of D_n (n <= 20).
    Directions {
        #[arg(long)]
        n: usize,
        /// Print every direction instead of the count.
        #[arg(long)]
        list: bool,
    },
    /// Run the full verification battery.
    Verify {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidDimension { .. }
            | Error::TOutOfRange { .. }
            | Error::EnumerationCap { .. }
            | Error::InvalidConfig(_)
            | Error::OracleScope(_)
            | Error::GridResolution(_)
            | Error::EmptyConstraintSpace => CliError::Usage(err.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            let _ = err.print();
            return code;
        }
    };
    let color = io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
    let stdout = io::stdout();
    let stderr = io::stderr();
    execute(&cli.command, &mut stdout.lock(), &mut stderr.lock(), color)
}

/// Runs one parsed command against the given streams and returns the exit code.
pub fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32 {
    let result = match command {
        Command::Table {
            max_n,
            format,
            include_numeric,
            restarts,
            seed,
        } => cmd_table(out, *max_n, *format, *include_numeric, *restarts, *seed),
        Command::Width { n, kind, exact } => cmd_width(out, *n, (*kind).into(), *exact),
        Command::Optimize {
            n,
            restarts,
            seed,
            tol,
        } => cmd_optimize(out, *n, *restarts, *seed, *tol),
        Command::Directions { n, list } => cmd_directions(out, *n, *list),
        Command::Verify { max_n, seed } => cmd_verify(out, *max_n, *seed, color),
    };
    let result = result.and_then(|code| out.flush().map(|_| code).map_err(CliError::from));
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn cmd_table(
    out: &mut dyn Write,
    max_n: usize,
    format: Format,
    include_numeric: bool,
    restarts: usize,
    seed: u64,
) -> Result<i32, CliError> {
    let cap = if include_numeric {
        TABLE_NUMERIC_MAX_N
    } else {
        TABLE_MAX_N
    };
    if max_n == 0 || max_n > cap {
        return Err(CliError::Usage(format!(
            "--max-n must be in 1..={cap}, got {max_n}"
        )));
    }
    let cfg = OptimizerConfig {
        restarts,
        seed,
        ..OptimizerConfig::default()
    };
    cfg.validate()?;

    if format == Format::Csv {
        writeln!(out, "{}", TableRow::csv_header(include_numeric))?;
    }
    for n in 1..=max_n {
        let mut row = TableRow::closed_form(n)?;
        if include_numeric {
            let numeric = minimize_width(&regular_simplex_vertices(n)?, &cfg)?;
            row = row.with_numeric(numeric.width);
        }
        match format {
            Format::Csv => writeln!(out, "{}", row.to_csv())?,
            Format::Json => writeln!(out, "{}", row.to_json())?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_width(
    out: &mut dyn Write,
    n: usize,
    kind: SimplexKind,
    exact: bool,
) -> Result<i32, CliError> {
    let w2 = width_squared(n, kind)?;
    if exact {
        writeln!(out, "width^2 = {w2}")?;
    } else {
        writeln!(out, "width = {}", format_decimal(w2.sqrt_f64()))?;
    }
    Ok(EXIT_OK)
}

fn join_coords(coords: &[f64]) -> String {
    coords
        .iter()
        .map(|&x| format_decimal(x))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_optimize(
    out: &mut dyn Write,
    n: usize,
    restarts: usize,
    seed: u64,
    tol: f64,
) -> Result<i32, CliError> {
    let pts = standard_simplex_vertices(n)?;
    let target = width_squared(n, SimplexKind::Standard)?;
    let cfg = OptimizerConfig {
        restarts,
        seed,
        tol,
        ..OptimizerConfig::default()
    };
    let r = minimize_width(&pts, &cfg)?;
    let optimal = is_optimal_direction(n, &r.direction)?;
    writeln!(out, "n: {n}")?;
    writeln!(out, "width: {}", format_decimal(r.width))?;
    writeln!(out, "closed-form: {}", format_decimal(target.sqrt_f64()))?;
    writeln!(out, "direction: {}", join_coords(r.direction.coords()))?;
    writeln!(out, "converged: {}", r.converged)?;
    writeln!(out, "optimal-family: {optimal}")?;
    Ok(EXIT_OK)
}

fn cmd_directions(out: &mut dyn Write, n: usize, list: bool) -> Result<i32, CliError> {
    let dirs = enumerate_optimal_directions(n)?;
    if list {
        for d in &dirs {
            writeln!(out, "{}", join_coords(d.coords()))?;
        }
    } else {
        writeln!(out, "directions: {}", dirs.len())?;
        writeln!(
            out,
            "width: {}",
            format_decimal(width_squared(n, SimplexKind::Standard)?.sqrt_f64())
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(out: &mut dyn Write, max_n: usize, seed: u64, color: bool) -> Result<i32, CliError> {
    if max_n == 0 || max_n > verify::VERIFY_MAX_N {
        return Err(CliError::Usage(format!(
            "--max-n must be in 1..={}, got {max_n}",
            verify::VERIFY_MAX_N
        )));
    }
    let checks = verify::run_checks(max_n, seed)?;
    let mut failed = Vec::new();
    for check in &checks {
        let tag = match (check.passed, color) {
            (true, false) => "PASS".to_string(),
            (false, false) => "FAIL".to_string(),
            (true, true) => "\x1b[32mPASS\x1b[0m".to_string(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".to_string(),
        };
        writeln!(out, "{tag} {}: {}", check.name, check.detail)?;
        if !check.passed {
            failed.push(check.name);
        }
    }
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", checks.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "failed: {}", failed.join(", "))?;
        Ok(EXIT_FAILURE)
    }
}
