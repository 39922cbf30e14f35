use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use epoly_core::fforacle::{self, Sl2, TraceStratum};
use epoly_core::report::{self, Target};
use epoly_core::Error;

#[derive(Parser)]
#[command(
    name = "epoly",
    version,
    about = "E-polynomials of SL(2,C)-character varieties of genus 3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a pipeline and print every intermediate value.
    Compute {
        #[arg(long, value_parser = parse_target)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare against the published values, or against point counts.
    Verify {
        #[arg(long, conflicts_with = "oracle", required_unless_present = "oracle")]
        paper: bool,
        /// Comma-separated odd primes up to 13.
        #[arg(long, value_name = "Q_LIST")]
        oracle: Option<String>,
    },
    /// Count tuples over SL(2, F_q) whose product of commutators is ±Id.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Center::Id)]
        center: Center,
        /// Restrict genus-3 counts to a stratum of commutator traces.
        #[arg(long)]
        trace_stratum: Option<TraceStratum>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Center {
    Id,
    MinusId,
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse()
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_mismatch() { 1 } else { 2 })
}

fn compute(target: Target, format: Format) -> Result<bool, Error> {
    let file = report::compute_reports(target)?;
    match format {
        Format::Json => print!("{}", file.to_json()),
        Format::Text => print!("{}", file.to_text()),
    }
    Ok(file.all_acceptable())
}

fn verify_paper() -> Result<(), Error> {
    let rows = report::paper_regression()?;
    for r in &rows {
        println!("{r}");
    }
    report::verify_paper().map(|_| ())
}

fn verify_oracle(list: &str) -> Result<(), Error> {
    let qs = fforacle::parse_q_list(list)?;
    let rows = fforacle::oracle_table(&qs)?;
    for r in &rows {
        println!("{r}");
    }
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.status == fforacle::RowStatus::Mismatch)
        .map(|r| r.to_string())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::VerificationFailed(bad))
    }
}

fn count(q: u64, genus: u32, center: Center, stratum: Option<TraceStratum>) -> Result<u128, Error> {
    let g = Sl2::new(q)?;
    let c = match center {
        Center::Id => g.identity(),
        Center::MinusId => g.minus_identity(),
    };
    let n1 = fforacle::commutator_distribution(&g);
    match stratum {
        Some(s) if genus == 3 => Ok(fforacle::trace_stratum_count(&g, &n1, c, s)),
        Some(_) => Err(Error::UnsupportedGenus(genus)),
        None => Ok(fforacle::genus_convolve(&g, &n1, genus)?.at(c)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute { target, format } => match compute(target, format) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => fail(&e),
        },
        Command::Verify { paper: true, .. } => match verify_paper() {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        },
        Command::Verify { oracle, .. } => {
            match verify_oracle(oracle.as_deref().unwrap_or_default()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(&e),
            }
        }
        Command::Count {
            q,
            genus,
            center,
            trace_stratum,
        } => match count(q, genus, center, trace_stratum) {
            Ok(n) => {
                println!("{n}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
    }
}
