//! `schubert`: compute Schubert polynomials, basis expansions, pipe dreams,
//! and run the exhaustive verification scan.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schubert_core::bases::{single_chm_of, ChmVector};
use schubert_core::pipedream::{enumerate_reduced_with_limit, ladder_graph, DEFAULT_ENUMERATION_LIMIT};
use schubert_core::verify::{Checks, ScanConfig, DEFAULT_N_MAX, DEFAULT_SEM_MAX};
use schubert_core::{
    expand_schubert_basis, run_suite, schubert, sem_expand, Error, Method, Permutation,
};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Schubert polynomials and their single-term expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DreamFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Sem,
    Chm,
    Schubert,
    Monomial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Theorems,
    Counts,
    Conjecture,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation.
    Schubert {
        /// One-line word: `4132`, or `1,10,2,...` for n > 9.
        #[arg(long)]
        w: String,
        /// divdiff, pipedream, or checked (both, compared).
        #[arg(long, default_value = "divdiff")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand a Schubert polynomial in another basis.
    Expand {
        #[arg(long)]
        w: String,
        #[arg(long, value_enum)]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List reduced pipe dreams, or emit the ladder-move graph.
    Pipedreams {
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value = "text")]
        format: DreamFormat,
        /// Abort when more dreams than this are found.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Run the exhaustive verification suite for n = 1..=N.
    Scan {
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n: usize,
        /// Largest n at which SEM expansions are solved.
        #[arg(long, default_value_t = DEFAULT_SEM_MAX)]
        sem_max: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "theorems,counts,conjecture")]
        checks: Vec<Check>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, env = "SCHUBERT_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        /// Report path; the report goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn parse_word(w: &str) -> Result<Permutation, Failure> {
    w.parse()
        .map_err(|e: Error| Failure::Usage(format!("invalid permutation '{w}': {e}")))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("value serializes")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Schubert { w, method, format } => {
            let w = parse_word(&w)?;
            let poly = schubert(&w, method)?;
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => println!("{}", to_json(&poly)),
            }
        }
        Command::Expand { w, basis, format } => {
            let w = parse_word(&w)?;
            let poly = schubert(&w, Method::DivDiff)?;
            match (basis, format) {
                (Basis::Sem, Format::Text) => println!("{}", sem_expand(&poly, w.n())?),
                (Basis::Sem, Format::Json) => println!("{}", to_json(&sem_expand(&poly, w.n())?)),
                (Basis::Chm, format) => {
                    let single: Option<ChmVector> = single_chm_of(&w);
                    match (format, single) {
                        (Format::Text, Some(h)) => println!("{h}"),
                        (Format::Text, None) => println!("not a single CHM"),
                        (Format::Json, h) => println!("{}", to_json(&json!({ "single": h }))),
                    }
                }
                (Basis::Schubert, Format::Text) => println!("{}", expand_schubert_basis(&poly, w.n())?),
                (Basis::Schubert, Format::Json) => {
                    println!("{}", to_json(&expand_schubert_basis(&poly, w.n())?))
                }
                (Basis::Monomial, Format::Text) => println!("{poly}"),
                (Basis::Monomial, Format::Json) => println!("{}", to_json(&poly)),
            }
        }
        Command::Pipedreams { w, format, limit } => {
            let w = parse_word(&w)?;
            match format {
                DreamFormat::Text => {
                    let dreams = enumerate_reduced_with_limit(&w, limit)?;
                    println!("count: {}", dreams.len());
                    for d in &dreams {
                        println!("\n{d}");
                    }
                }
                DreamFormat::Json => {
                    let dreams = enumerate_reduced_with_limit(&w, limit)?;
                    println!(
                        "{}",
                        to_json(&json!({ "w": w, "count": dreams.len(), "dreams": dreams }))
                    );
                }
                DreamFormat::Dot => print!("{}", ladder_graph(&w, limit)?.to_dot(&w)),
            }
        }
        Command::Scan {
            n,
            sem_max,
            checks,
            jobs,
            cache_dir,
            out,
        } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let config = ScanConfig {
                n_max: n,
                sem_max,
                checks: Checks {
                    theorems: checks.iter().any(|c| matches!(c, Check::Theorems)),
                    counts: checks.iter().any(|c| matches!(c, Check::Counts)),
                    conjecture: checks.iter().any(|c| matches!(c, Check::Conjecture)),
                },
                jobs,
                cache_dir,
                report_path: out.clone(),
            };
            let report = run_suite(&config)?;
            if out.is_none() {
                println!("{}", to_json(&report));
            }
            for row in &report.counts {
                let sem = row.sem.map_or("-".to_string(), |s| s.to_string());
                eprintln!(
                    "n={}: monomial {} sem {} chm {}{}",
                    row.n,
                    row.monomial,
                    sem,
                    row.chm,
                    if row.pass { "" } else { "  [count mismatch]" }
                );
            }
            for (name, results) in &report.theorems {
                for t in results.iter().filter(|t| !t.pass) {
                    eprintln!("{name} fails at n={}: {} counterexample(s)", t.n, t.counterexamples.len());
                }
            }
            if let Some(c) = &report.conjecture {
                eprintln!("conjecture: {}", c.status);
            }
            eprintln!("status: {}", if report.pass { "pass" } else { "FAIL" });
            return Ok(report.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
