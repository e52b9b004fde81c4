mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use logarr::cycle::Check;

/// Exact invariants and cycle-class checks for central hyperplane arrangements.
#[derive(Parser, Debug)]
#[command(name = "logarr", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice, characteristic and Tutte polynomials, beta, bridges, components.
    Info {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Run one check on an arrangement file.
    Verify {
        #[arg(value_parser = parse_check)]
        check: Check,
        file: PathBuf,
        #[command(flatten)]
        opts: CheckOpts,
        #[command(flatten)]
        out: Output,
    },
    /// Run checks over the built-in fixtures, or those in a directory.
    Corpus {
        /// Only fixtures whose name starts with this prefix.
        name: Option<String>,
        /// Read fixtures from this directory instead of the built-in set.
        #[arg(long)]
        fixture_dir: Option<PathBuf>,
        /// Restrict to these checks (repeatable); default is all of them.
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<Check>,
        /// Run fixtures on separate threads. Output order is unchanged.
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        opts: CheckOpts,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CheckOpts {
    /// Degree bound for derivation generators (default: number of hyperplanes).
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Bidegree bound a+b for the Hilbert function oracle.
    #[arg(long, default_value_t = 6)]
    pub check_bound: u32,
    /// Bidegree bound a+b for the logarithmic complex identity.
    #[arg(long, default_value_t = 4)]
    pub dcplx_bound: u32,
    /// Treat the arrangement as tame regardless of its flags.
    #[arg(long)]
    pub tame: bool,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Pretty-print JSON output.
    #[arg(long)]
    pub pretty: bool,
    /// Include wall times. Off by default so that output is reproducible.
    #[arg(long)]
    pub timing: bool,
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse::<Check>().map_err(|_| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check '{s}'; expected one of: {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Info { file, out } => commands::info(&file, out),
        Command::Verify { check, file, opts, out } => commands::verify(check, &file, &opts, out),
        Command::Corpus { name, fixture_dir, checks, parallel, opts, out } => {
            let checks = if checks.is_empty() { Check::ALL.to_vec() } else { checks };
            commands::corpus(name.as_deref(), fixture_dir.as_deref(), &checks, parallel, &opts, out)
        }
    };
    ExitCode::from(code)
}
