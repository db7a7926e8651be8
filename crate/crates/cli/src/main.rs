use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qspectra::{cmd_check, cmd_report, cmd_selftest, CheckOptions, JsonTarget, EXIT_USAGE};

/// Quantum spectra of Fano varieties and Lefschetz collection checks.
#[derive(Parser)]
#[command(name = "qspectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum report for a registered variety, e.g. P3, G(2,4), IG(2,6), E7.
    Report {
        id: String,
        /// Also write the JSON report to this path (`-` prints JSON instead of markdown).
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// Check a collection spec file (or `builtin:<name>`) against the spectrum.
    Check {
        file: String,
        /// Verify exceptionality with Borel-Weil-Bott.
        #[arg(long)]
        bwb: bool,
        /// Treat numerology mismatches as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
    },
    /// Run the cross-validation suite.
    Selftest {
        /// Only run checks of one module.
        #[arg(long, value_name = "MODULE")]
        filter: Option<String>,
        /// Structure-constant directory (defaults to $QSPECTRA_DATA or the bundled data).
        #[arg(long, value_name = "DIR")]
        data: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = match cli.command {
        Command::Report { id, json } => {
            cmd_report(&id, json.as_deref().map(JsonTarget::parse).as_ref(), &mut out, &mut err)
        }
        Command::Check {
            file,
            bwb,
            strict,
            json,
        } => {
            let opts = CheckOptions {
                bwb,
                strict,
                json: json.as_deref().map(JsonTarget::parse),
            };
            cmd_check(&file, &opts, &mut out, &mut err)
        }
        Command::Selftest { filter, data } => cmd_selftest(filter.as_deref(), data.as_deref(), &mut out, &mut err),
    };
    ExitCode::from(code)
}
