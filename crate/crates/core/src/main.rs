use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperinvert::catalog::{list_identities, CatalogError, Param, Status};
use hyperinvert::inversion::{CoefficientFile, FiniteSequence};
use hyperinvert::selftest::{run_selftest, SelftestConfig};
use hyperinvert::verify::{run_verification, SamplingPlan, VerifyError};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(name = "hyperinvert", version, about = "Exact multiplicate Gould-Hsu inversion and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog records.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
    },
    /// Verify one record at seeded random admissible points.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long, conflicts_with = "all_variants")]
        variant: Option<String>,
        #[arg(long)]
        all_variants: bool,
        #[arg(long, default_value_t = SamplingPlan::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = SamplingPlan::DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = SamplingPlan::DEFAULT_SEED)]
        seed: u64,
        /// Largest |numerator| of drawn rationals.
        #[arg(long, default_value_t = 9)]
        max_numerator: i64,
        /// Largest denominator of drawn rationals.
        #[arg(long, default_value_t = 4)]
        max_denominator: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep every counterexample instead of the first ten.
        #[arg(long)]
        verbose: bool,
    },
    /// Apply the forward or inverse transform to a sequence.
    Invert {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        sequence: PathBuf,
        #[arg(long, value_enum, default_value_t = Direction::Inverse)]
        direction: Direction,
    },
    /// Randomized checks of the inversion engine.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = match e {
            VerifyError::SamplingExhausted { .. } => EXIT_EXHAUSTED,
            VerifyError::Catalog(CatalogError::NotAdmissible(_)) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List { format } => list(format),
        Command::Verify {
            id,
            variant,
            all_variants: _,
            samples,
            max_n,
            seed,
            max_numerator,
            max_denominator,
            format,
            out,
            verbose,
        } => {
            let mut plan =
                SamplingPlan::new(id).samples(samples).max_n(max_n).seed(seed).bounds(max_numerator, max_denominator);
            if let Some(v) = variant {
                plan = plan.variant(v);
            }
            if verbose {
                plan.counterexample_cap = None;
            }
            verify(&plan, format, out.as_deref())
        }
        Command::Invert { ell, coeffs, sequence, direction } => invert(ell, &coeffs, &sequence, direction),
        Command::Selftest { seed } => selftest(seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct ListEntry {
    id: &'static str,
    anchor: &'static str,
    params: &'static [Param],
    status: Status,
    variants: Vec<&'static str>,
}

fn list(format: ListFormat) -> Result<(), Failure> {
    let entries: Vec<ListEntry> = list_identities()
        .iter()
        .map(|r| ListEntry {
            id: r.id,
            anchor: r.anchor,
            params: &r.params,
            status: r.status,
            variants: r.variant_names(),
        })
        .collect();
    match format {
        ListFormat::Json => println!("{}", serde_json::to_string_pretty(&entries).expect("list serializes")),
        ListFormat::Table => {
            let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(2);
            println!("{:width$}  {:12}  {:24}  anchor", "id", "status", "params");
            for e in &entries {
                let params: Vec<&str> = e.params.iter().map(|p| p.name).collect();
                println!("{:width$}  {:12}  {:24}  {}", e.id, e.status.as_str(), params.join(","), e.anchor);
            }
        }
    }
    Ok(())
}

fn verify(plan: &SamplingPlan, format: ReportFormat, out: Option<&Path>) -> Result<(), Failure> {
    let report = run_verification(plan)?;
    let text = match format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Csv => report.to_csv(),
    };
    match out {
        Some(path) => fs::write(path, &text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if report.expected_variants_hold() {
        Ok(())
    } else {
        let failed: Vec<&str> =
            report.variants.iter().filter(|v| v.expected_holds && v.fails > 0).map(|v| v.name.as_str()).collect();
        Err(Failure { code: EXIT_FAILURE, message: format!("{}: variant {} failed", report.id, failed.join(", ")) })
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn invert(ell: usize, coeffs: &Path, sequence: &Path, direction: Direction) -> Result<(), Failure> {
    let file: CoefficientFile = read_json(coeffs)?;
    let seqs = file.into_sequences(ell).map_err(|e| Failure::usage(e.to_string()))?;
    let input: FiniteSequence = read_json(sequence)?;
    let output = match direction {
        Direction::Forward => seqs.forward_transform(&input),
        Direction::Inverse => seqs.inverse_transform(&input),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;
    println!("{}", serde_json::to_string(&output).expect("sequence serializes"));
    Ok(())
}

fn selftest(seed: u64) -> Result<(), Failure> {
    let report = run_selftest(&SelftestConfig::with_seed(seed));
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} ({} instances): {}", c.name, c.instances, c.detail);
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure { code: EXIT_FAILURE, message: "selftest failed".into() })
    }
}
