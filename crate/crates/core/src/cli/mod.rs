//! The `k3lat` command line.
//!
//! ```text
//! k3lat <command> <config.json> [--json] [--power N] [--degree-max N] [--orbit N] [--seed N]
//! ```
//!
//! Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage, 65 config.

pub mod commands;
pub mod config;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use config::{Config, ConfigError};
pub use report::{Report, Status};
pub use verify::verify_paper;

use crate::error::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_CONFIG: i32 = 65;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Info,
    Curves,
    Cones,
    Involution,
    Dynamics,
    Product,
    VerifyPaper,
}

#[derive(Debug, Parser)]
#[command(name = "k3lat", version, about = "Exact lattice computations for rank-2 K3 surfaces and their Hilbert squares")]
struct Args {
    command: Command,
    config: PathBuf,
    /// Emit the JSON report instead of a table.
    #[arg(long)]
    json: bool,
    /// Power of the composite to print (dynamics).
    #[arg(long, value_name = "N")]
    power: Option<u64>,
    /// Degree bound for the effective-cone search.
    #[arg(long, value_name = "N")]
    degree_max: Option<u32>,
    /// Orbit length (dynamics, verify-paper).
    #[arg(long, value_name = "N")]
    orbit: Option<usize>,
    /// Seed for randomized spot checks.
    #[arg(long, value_name = "N", default_value_t = 0)]
    seed: u64,
}

/// Flags shared by all commands.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub power: Option<u64>,
    pub degree_max: Option<u32>,
    pub orbit: Option<usize>,
    pub seed: u64,
}

/// Runs one command and returns its outcome.
pub fn execute(command: Command, config: &Config, options: &Options) -> crate::Result<commands::Outcome> {
    match command {
        Command::Info => commands::info(config, options),
        Command::Curves => commands::curves(config, options),
        Command::Cones => commands::cones(config, options),
        Command::Involution => commands::involution(config, options),
        Command::Dynamics => commands::dynamics(config, options),
        Command::Product => commands::product(config, options),
        Command::VerifyPaper => {
            let report = verify_paper(config, options);
            let table = commands::verify_table(&report);
            Ok(commands::Outcome { report, table })
        }
    }
}

/// Entry point behind the binary; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let config = match Config::from_path(&args.config) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "k3lat: {e}");
            return EXIT_CONFIG;
        }
    };
    let options = Options {
        power: args.power,
        degree_max: args.degree_max,
        orbit: args.orbit,
        seed: args.seed,
    };
    match execute(args.command, &config, &options) {
        Ok(o) => {
            let written = if args.json {
                writeln!(out, "{}", o.report.to_json())
            } else {
                o.table.iter().try_for_each(|l| writeln!(out, "{l}")).and_then(|_| {
                    let s = &o.report.summary;
                    writeln!(
                        out,
                        "{} pass, {} fail, {} inconclusive, {} skipped",
                        s.pass, s.fail, s.inconclusive, s.skipped
                    )
                })
            };
            if written.is_err() {
                return EXIT_FAIL;
            }
            o.report.exit_code()
        }
        Err(e @ (Error::Inconclusive { .. } | Error::NoEffectiveClasses { .. })) => {
            let _ = writeln!(err, "k3lat: {e}");
            EXIT_INCONCLUSIVE
        }
        Err(e) => {
            let _ = writeln!(err, "k3lat: {e}");
            EXIT_FAIL
        }
    }
}
