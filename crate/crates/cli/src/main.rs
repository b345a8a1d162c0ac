//! Command-line front-end for the verification suites and spinor tables.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
//! usage or configuration error. Environment variables are never read.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use selfconj::halfspin::{FourMomentum, PhaseConvention, RestBasis};
use selfconj::suite::{self, GridSpec, OutputFormat, Suite, SuiteConfig, TableKind};

#[derive(Parser, Debug)]
#[command(name = "selfconj", version, about = "Checks identities of self/anti-self charge-conjugate spinors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the check suites and print one record per check.
    Check(CheckArgs),
    /// Print the components of a spinor family at one momentum.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct ConventionArgs {
    /// Phase of the spin-up rest spinor.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    theta1: f64,
    /// Phase of the spin-down rest spinor.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    theta2: f64,
    /// Overall phase of the charge-conjugation operator.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    thetac: f64,
    /// Rest-spinor normalization N (default √m).
    #[arg(long)]
    norm: Option<f64>,
    /// Rest-frame 2-spinor basis.
    #[arg(long, value_enum, default_value_t = Basis::Helicity)]
    basis: Basis,
}

impl ConventionArgs {
    fn convention(&self) -> PhaseConvention<f64> {
        PhaseConvention {
            theta1: self.theta1,
            theta2: self.theta2,
            theta_c: self.thetac,
            norm: self.norm,
            basis: self.basis.into(),
        }
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Masses, comma separated or repeated.
    #[arg(long, value_delimiter = ',', default_value = "1", allow_negative_numbers = true)]
    mass: Vec<f64>,
    /// Momentum grid: `k1,k2,...` or `k1,...@polar:azimuth,...`.
    #[arg(long, default_value = "0.3,1,2.5")]
    grid: GridSpec,
    /// Tolerance for identities that hold up to rounding.
    #[arg(long, default_value_t = suite::DEFAULT_TOLERANCE, allow_negative_numbers = true)]
    tol: f64,
    /// Suites to run; all when omitted.
    #[arg(long, value_enum)]
    suite: Vec<SuiteArg>,
    #[arg(long, value_enum, default_value_t = Format::JsonLines)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    convention: ConventionArgs,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Spinor family to tabulate.
    #[arg(value_enum)]
    what: TableArg,
    /// Three-momentum `px,py,pz`.
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    momentum: String,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    convention: ConventionArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    JsonLines,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    Halfspin,
    Spin1,
    Fock,
    Fieldops,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableArg {
    Lambda,
    Rho,
    Dirac,
    Mr,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Basis {
    Helicity,
    HelicityReflectedDown,
    SigmaZ,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::JsonLines => OutputFormat::JsonLines,
            Format::Text => OutputFormat::Text,
        }
    }
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Halfspin => Suite::Halfspin,
            SuiteArg::Spin1 => Suite::Spin1,
            SuiteArg::Fock => Suite::Fock,
            SuiteArg::Fieldops => Suite::Fieldops,
        }
    }
}

impl From<TableArg> for TableKind {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::Lambda => TableKind::Lambda,
            TableArg::Rho => TableKind::Rho,
            TableArg::Dirac => TableKind::Dirac,
            TableArg::Mr => TableKind::Mr,
        }
    }
}

impl From<Basis> for RestBasis {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Helicity => RestBasis::Helicity,
            Basis::HelicityReflectedDown => RestBasis::HelicityReflectedDown,
            Basis::SigmaZ => RestBasis::SigmaZ,
        }
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Check(args) => check(args),
        Command::Table(args) => table(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Runs the suites; `Ok(false)` when any check fails.
fn check(args: CheckArgs) -> Result<bool> {
    let suites = if args.suite.is_empty() {
        Suite::ALL.into_iter().collect()
    } else {
        args.suite.iter().map(|&s| s.into()).collect()
    };
    let config = SuiteConfig {
        masses: args.mass,
        grid: args.grid,
        tolerance: args.tol,
        convention: args.convention.convention(),
        suites,
        format: args.format.into(),
    };
    let report = suite::run(&config).context("invalid configuration")?;
    emit(args.out.as_ref(), &report.render(config.format))?;
    Ok(report.all_passed())
}

fn table(args: TableArgs) -> Result<()> {
    let parts = args
        .momentum
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .with_context(|| format!("momentum {:?} is not px,py,pz", args.momentum))?;
    let [px, py, pz] = parts[..] else {
        anyhow::bail!("momentum {:?} needs exactly three components", args.momentum);
    };
    let p = FourMomentum::from_cartesian(args.mass, [px, py, pz])?;
    let text = suite::tabulate(&p, &args.convention.convention(), args.what.into())?;
    emit(args.out.as_ref(), &text)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}
