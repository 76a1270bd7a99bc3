//! Command-line front end for the `herbrand` crate.
//!
//! [`run`] parses arguments, dispatches, and returns the exit status with
//! everything that should be printed; `main` only does the printing.

pub mod commands;
pub mod error;
pub mod input;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use herbrand::{PellVariant, DEFAULT_ORACLE_BOUND};

pub use error::CliError;
pub use input::{parse_gset_file, parse_module_file, GSetFile, ModuleFile};
use render::Rendered;
pub use verify::{run_verification, Claim, VerificationReport, VerifyOptions};

/// Environment variable overriding the brute-force enumeration bound.
pub const ORACLE_BOUND_VAR: &str = "HERBRAND_ORACLE_BOUND";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "herbrand",
    version,
    about = "Tate cohomology of cyclic group modules and real quadratic unit groups"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Modules given as JSON files
    Module {
        #[command(subcommand)]
        action: ModuleAction,
    },
    /// G-sets and their permutation modules
    Perm {
        #[command(subcommand)]
        action: PermAction,
    },
    /// Real quadratic fields Q(sqrt D)
    Quad {
        #[command(subcommand)]
        action: QuadAction,
    },
    /// Run a seeded verification sweep
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum ModuleAction {
    /// Tate groups and Herbrand quotient
    Compute { file: PathBuf },
    /// Orders of the Tate groups by listing every element
    Brute { file: PathBuf },
    /// Index invariants behind the closed forms for #H^1
    Profile { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum PermAction {
    /// Orbits, stabilizers and the Burnside count
    Orbits { file: PathBuf },
    /// Compare orbit formulas with the cohomology of the permutation module
    Verify { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PellArg {
    MinusOne,
    PlusOne,
    MinusFour,
}

impl From<PellArg> for PellVariant {
    fn from(v: PellArg) -> Self {
        match v {
            PellArg::MinusOne => PellVariant::MinusOne,
            PellArg::PlusOne => PellVariant::PlusOne,
            PellArg::MinusFour => PellVariant::MinusFour,
        }
    }
}

#[derive(Subcommand, Debug)]
enum QuadAction {
    /// Fundamental unit and continued fraction of sqrt(D)
    Unit { d: String },
    /// Least positive solution of a Pell equation
    Pell {
        d: String,
        #[arg(long, value_enum, default_value_t = PellArg::MinusOne)]
        variant: PellArg,
    },
    /// #H^1 of the unit group, three ways
    H1 { d: String },
    /// Splitting type of a prime, or `inf`
    Split { d: String, place: String },
    /// S-unit Herbrand quotient; places are primes or `inf`
    Sunit {
        d: String,
        #[arg(required = true)]
        places: Vec<String>,
    },
    /// Trace index and cohomology of the ring of integers
    Trace { d: String },
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    claim: Claim,
    /// Number of trials (ignored by `units`, which sweeps every D)
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    min_d: u64,
    #[arg(long, default_value_t = 2000)]
    max_d: u64,
    /// Include wall-clock time in JSON output
    #[arg(long)]
    timing: bool,
}

/// Exit status plus what goes to stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn oracle_bound() -> Result<u64, CliError> {
    match std::env::var(ORACLE_BOUND_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{ORACLE_BOUND_VAR} must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORACLE_BOUND),
    }
}

fn dispatch(command: Command) -> Result<Rendered, CliError> {
    use commands::*;
    match command {
        Command::Module { action } => match action {
            ModuleAction::Compute { file } => {
                Ok(module_compute(&parse_module_file(&read(&file)?)?))
            }
            ModuleAction::Brute { file } => {
                let m = parse_module_file(&read(&file)?)?;
                module_brute(&m, oracle_bound()?)
            }
            ModuleAction::Profile { file } => {
                Ok(module_profile(&parse_module_file(&read(&file)?)?))
            }
        },
        Command::Perm { action } => match action {
            PermAction::Orbits { file } => Ok(perm_orbits(&parse_gset_file(&read(&file)?)?)),
            PermAction::Verify { file } => Ok(perm_verify(&parse_gset_file(&read(&file)?)?)),
        },
        Command::Quad { action } => match action {
            QuadAction::Unit { d } => Ok(quad_unit(&parse_field(&d)?)),
            QuadAction::Pell { d, variant } => quad_pell(&parse_int(&d, "D")?, variant.into()),
            QuadAction::H1 { d } => Ok(quad_h1(&parse_field(&d)?)),
            QuadAction::Split { d, place } => quad_split(&parse_field(&d)?, &parse_place(&place)?),
            QuadAction::Sunit { d, places } => {
                let k = parse_field(&d)?;
                let places = places
                    .iter()
                    .map(|p| parse_place(p))
                    .collect::<Result<Vec<_>, _>>()?;
                quad_sunit(&k, &places)
            }
            QuadAction::Trace { d } => Ok(quad_trace(&parse_field(&d)?)),
        },
        Command::Verify(args) => {
            if args.min_d > args.max_d {
                return Err(CliError::Usage(format!(
                    "--min-d {} exceeds --max-d {}",
                    args.min_d, args.max_d
                )));
            }
            let opts = VerifyOptions {
                claim: args.claim,
                trials: args.trials,
                seed: args.seed,
                min_d: args.min_d,
                max_d: args.max_d,
                oracle_bound: oracle_bound()?,
            };
            Ok(verify::render_report(&run_verification(&opts), args.timing))
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(rendered) => Outcome {
            status: if rendered.ok { EXIT_OK } else { EXIT_FAILED },
            stdout: match format {
                Format::Text => rendered.text,
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rendered.json).expect("json")
                ),
            },
            stderr: String::new(),
        },
        Err(e) => match format {
            Format::Text => Outcome {
                status: EXIT_INVALID,
                stdout: String::new(),
                stderr: format!("error[{}]: {e}\n", e.code()),
            },
            Format::Json => Outcome {
                status: EXIT_INVALID,
                stdout: format!(
                    "{}\n",
                    serde_json::to_string_pretty(&e.to_json()).expect("json")
                ),
                stderr: String::new(),
            },
        },
    }
}
