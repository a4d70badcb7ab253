use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liedens::embedcheck::{EmbedError, DEFAULT_L_MAX, MIN_L_MAX};
use liedens::exec::Execution;
use liedens::lnd::LndError;
use liedens::orbits::OrbitError;
use liedens::report::{appendix_report, embed_report, lnd_report, orbits_report, Report};
use liedens::rootsys::LieType;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

/// Largest `--lmax`; orbit counts stay inside 128 bits well past this.
const L_MAX_CAP: u32 = 500;

#[derive(Parser)]
#[command(name = "liedens", version, about = "Exact checks on nilpotent orbits, root systems and SL2 derivations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Number of nilpotent orbits of a simple type, e.g. `B3` or `E6`.
    Orbits {
        #[arg(value_name = "TYPE")]
        lie_type: LieType,
    },
    /// Decide which SL2-subgroup of G has no conjugate inside R.
    Embed {
        g: LieType,
        r: LieType,
        /// Family parameter l, checked against the pair.
        #[arg(long = "l")]
        l: Option<u32>,
    },
    /// Full reports.
    Report {
        #[command(subcommand)]
        which: ReportKind,
    },
    /// Derivation checks on the coordinate ring of SL2.
    Lnd {
        #[command(subcommand)]
        which: LndKind,
    },
}

#[derive(Subcommand)]
enum ReportKind {
    /// Orbit-count inequalities, the subregular table and its checks.
    Appendix {
        #[arg(long, default_value_t = DEFAULT_L_MAX,
              value_parser = clap::value_parser!(u32).range(i64::from(MIN_L_MAX)..=i64::from(L_MAX_CAP)))]
        lmax: u32,
    },
}

#[derive(Subcommand)]
enum LndKind {
    /// Nilpotence, kernels, the semi-compatibility witness, degrees and the
    /// invariant hypersurface.
    Verify {
        #[arg(long, default_value_t = 4,
              value_parser = clap::value_parser!(u32).range(1..=64))]
        cap: u32,
    },
}

enum Failure {
    Usage(String),
    Unsupported(String),
    Check(String),
}

impl From<EmbedError> for Failure {
    fn from(e: EmbedError) -> Self {
        match e {
            EmbedError::Unsupported { .. } => Failure::Unsupported(e.to_string()),
            EmbedError::ParameterMismatch { .. } | EmbedError::LmaxTooSmall { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<OrbitError> for Failure {
    fn from(e: OrbitError) -> Self {
        Failure::Check(e.to_string())
    }
}

impl From<LndError> for Failure {
    fn from(e: LndError) -> Self {
        Failure::Check(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    Ok(match &cli.command {
        Command::Orbits { lie_type } => orbits_report(*lie_type)?,
        Command::Embed { g, r, l } => embed_report(*g, *r, *l)?,
        Command::Report {
            which: ReportKind::Appendix { lmax },
        } => appendix_report(*lmax, exec)?,
        Command::Lnd {
            which: LndKind::Verify { cap },
        } => lnd_report(*cap)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for r in report.results.iter().filter(|r| !r.pass) {
                    eprintln!("failed: {}: {}", r.anchor, r.line());
                }
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("unsupported: {msg}");
            ExitCode::from(EXIT_UNSUPPORTED)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
