use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use schubert_cli::{
    analyze, oracle_check, quasi_resolutions, render_oracle, render_quasi_resolutions, render_report,
    render_smoothness, render_verify, smoothness, verify, OutputFormat,
};
use schubert_core::oracle::Selection;
use schubert_core::Permutation;

/// Singular loci of Schubert varieties in the flag variety.
#[derive(Parser)]
#[command(name = "schubert", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components of the singular locus with transversal type, KL polynomial and multiplicity.
    Analyze(PermArgs),
    /// Smoothness test by 4231/3412 pattern avoidance.
    Smooth(PermArgs),
    /// Frame, quasi-resolutions and exceptional loci of a permutation containing 3412.
    Quasires(PermArgs),
    /// Compares the components with a tangent-space brute force.
    Oracle(PermArgs),
    /// Runs the oracle equivalence and property suites over S_n.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PermArgs {
    /// One-line notation, e.g. "3,4,1,2" or "3 4 1 2".
    permutation: String,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// Every permutation of S_n (n ≤ 7).
    #[arg(long, conflicts_with = "sample")]
    all: bool,
    /// This many uniformly sampled permutations.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

enum Failure {
    Input(String),
    Verification(String),
}

fn parse(input: &str) -> Result<Permutation, Failure> {
    input.parse().map_err(|e| Failure::Input(format!("cannot read {input:?}: {e}")))
}

fn emit<T: Serialize>(format: OutputFormat, value: &T, table: impl FnOnce(&T) -> String) {
    match format {
        OutputFormat::Table => print!("{}", table(value)),
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(value).expect("reports serialize")),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => {
            let report = analyze(&parse(&args.permutation)?);
            if report.smooth != report.components.is_empty() {
                return Err(Failure::Verification(format!("{}: smoothness flag disagrees with components", report.w)));
            }
            emit(args.format, &report, render_report);
        }
        Command::Smooth(args) => emit(args.format, &smoothness(&parse(&args.permutation)?), render_smoothness),
        Command::Quasires(args) => {
            let w = parse(&args.permutation)?;
            let qr = quasi_resolutions(&w).map_err(|e| Failure::Input(format!("{w} has no quasi-resolution: {e}")))?;
            emit(args.format, &qr, |qr| render_quasi_resolutions(&w, qr));
        }
        Command::Oracle(args) => {
            let report = oracle_check(&parse(&args.permutation)?);
            emit(args.format, &report, render_oracle);
            if !report.agree {
                return Err(Failure::Verification(format!("{}: engine and oracle disagree", report.w)));
            }
        }
        Command::Verify(args) => {
            let selection = match (args.all, args.sample) {
                (true, _) if args.n > 7 => return Err(Failure::Input("--all is limited to n ≤ 7".to_string())),
                (true, _) => Selection::All,
                (false, Some(count)) => Selection::Sample { count, seed: args.seed },
                (false, None) => return Err(Failure::Input("pass --all or --sample K".to_string())),
            };
            if args.n == 0 {
                return Err(Failure::Input("n must be positive".to_string()));
            }
            let report = verify(args.n, selection);
            emit(args.format, &report, render_verify);
            if !report.passed() {
                return Err(Failure::Verification(format!("S_{}: verification failed", args.n)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(message)) => {
            eprintln!("verification failure: {message}");
            ExitCode::from(3)
        }
    }
}
