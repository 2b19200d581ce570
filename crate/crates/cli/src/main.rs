//! Command-line front end: shingle inspection, per-document statistics,
//! pairwise similarity by the exact and approximate methods, the random
//! baseline, and corpus-level matrices.
//!
//! Exit codes: 0 success, 2 usage/parameter error, 1 I/O error.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use shingle_sim::{
    emit, expected_similarity, gc_estimate, match_similarity, monte_carlo_expected_similarity,
    multiplicity_oracle, overlap_pmf, pairwise_matrix, rum_repeated, shingle, EditedDocument,
    Error, Method, MethodParams, OutputFormat, SubsampleSpec,
};

#[derive(Parser)]
#[command(name = "shingle-sim", version, about = "Text similarity over positional k-shingles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    file_a: PathBuf,
    file_b: PathBuf,
    /// Shingle length in characters.
    #[arg(short, default_value_t = 3)]
    k: usize,
    /// Lower-case the raw text before editing.
    #[arg(long)]
    fold_case: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the positional k-shingles of a file, one "rank TAB value"
    /// per line (debugging aid). The editing pass is applied first.
    Shingle {
        file: PathBuf,
        #[arg(short, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        fold_case: bool,
    },
    /// Per-document statistics: one JSON object per file.
    Stats {
        files: Vec<PathBuf>,
        #[arg(long)]
        fold_case: bool,
    },
    /// Similarity of one document pair.
    #[command(subcommand)]
    Sim(SimCommand),
    /// Expected similarity of two random subsets of an n-universe.
    Baseline {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        k: u64,
        #[arg(short)]
        m: u64,
        /// Estimate by Monte Carlo with this many trials instead of the
        /// exact formula.
        #[arg(long)]
        mc: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Pairwise similarity matrix over a directory of documents.
    Matrix {
        dir: PathBuf,
        #[arg(long, default_value = "exact")]
        method: String,
        #[arg(short, default_value_t = 3)]
        k: usize,
        /// Subsample size for the gc method.
        #[arg(long, default_value_t = 10_000)]
        ng: usize,
        /// Hash count for the rum method.
        #[arg(short, default_value_t = 20)]
        p: usize,
        /// Repetitions (defaults: 10 for gc, 50 for rum).
        #[arg(long)]
        reps: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "json")]
        format: String,
        /// Output file (stdout when absent).
        #[arg(short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SimCommand {
    /// Exact similarity via the matching algorithm or the multiplicity
    /// oracle.
    Exact {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "oracle")]
        engine: String,
    },
    /// Glivenko-Cantelli estimate on random subsamples.
    Gc {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 10_000)]
        ng: usize,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// RUM min-hash estimate on the combined shingle collection.
    Rum {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short, default_value_t = 20)]
        p: usize,
        #[arg(long, default_value_t = 50)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Usage(_) | Error::Parameter(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn load_pair(pair: &PairArgs) -> Result<(shingle_sim::ShingleSequence, shingle_sim::ShingleSequence), Error> {
    let doc_a = EditedDocument::load_with_folding(&pair.file_a, pair.fold_case)?;
    let doc_b = EditedDocument::load_with_folding(&pair.file_b, pair.fold_case)?;
    Ok((shingle(&doc_a.text(), pair.k)?, shingle(&doc_b.text(), pair.k)?))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Shingle { file, k, fold_case } => {
            let doc = EditedDocument::load_with_folding(&file, fold_case)?;
            let seq = shingle(&doc.text(), k)?;
            let mut out = std::io::stdout().lock();
            for entry in seq.entries() {
                writeln!(out, "{}\t{}", entry.rank, entry.value)?;
            }
            Ok(())
        }
        Command::Stats { files, fold_case } => {
            if files.is_empty() {
                return Err(Error::usage("stats needs at least one file"));
            }
            for file in files {
                let doc = EditedDocument::load_with_folding(&file, fold_case)?;
                println!(
                    "{}",
                    json!({
                        "id": doc.id,
                        "rows": doc.row_count,
                        "letters_before": doc.letter_count_before,
                        "letters_after": doc.letter_count_after,
                    })
                );
            }
            Ok(())
        }
        Command::Sim(sim) => run_sim(sim),
        Command::Baseline { n, k, m, mc, seed } => {
            let value = match mc {
                Some(trials) => {
                    let (estimate, std_err) =
                        monte_carlo_expected_similarity(n, k, m, trials, seed)?;
                    json!({
                        "expected_sim": estimate,
                        "method": "monte-carlo",
                        "pmf_head": [],
                        "std_err": std_err,
                    })
                }
                None => {
                    let dist = overlap_pmf(n, k, m)?;
                    let head: Vec<f64> = dist.pmf().iter().take(6).copied().collect();
                    json!({
                        "expected_sim": expected_similarity(n, k, m)?,
                        "method": "exact",
                        "pmf_head": head,
                    })
                }
            };
            println!("{value}");
            Ok(())
        }
        Command::Matrix {
            dir,
            method,
            k,
            ng,
            p,
            reps,
            seed,
            format,
            output,
        } => {
            let method = Method::parse(&method)?;
            let format = OutputFormat::parse(&format)?;
            let reps = reps.unwrap_or(match method {
                Method::Rum => 50,
                _ => 10,
            });
            let params = MethodParams { k, ng, p, reps, seed };
            let reports = pairwise_matrix(&dir, method, &params)?;
            match output {
                Some(path) => emit(&reports, format, &mut File::create(path)?),
                None => emit(&reports, format, &mut std::io::stdout().lock()),
            }
        }
    }
}

fn run_sim(sim: SimCommand) -> Result<(), Error> {
    match sim {
        SimCommand::Exact { pair, engine } => {
            let (a, b) = load_pair(&pair)?;
            let start = Instant::now();
            let result = match engine.as_str() {
                "matcher" => match_similarity(&a, &b)?,
                "oracle" => multiplicity_oracle(&a, &b)?,
                other => {
                    return Err(Error::usage(format!(
                        "unknown engine '{other}' (expected matcher|oracle)"
                    )))
                }
            };
            let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            println!(
                "{}",
                json!({
                    "sim": result.similarity,
                    "kc": result.kc,
                    "n_a": result.n_a,
                    "n_b": result.n_b,
                    "elapsed_ms": elapsed_ms,
                })
            );
            Ok(())
        }
        SimCommand::Gc {
            pair,
            ng,
            reps,
            seed,
        } => {
            let (a, b) = load_pair(&pair)?;
            let spec = SubsampleSpec::new(ng, reps, seed)?;
            let start = Instant::now();
            let est = gc_estimate(&a, &b, &spec)?;
            let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            println!(
                "{}",
                json!({
                    "mean": est.mean,
                    "std": est.std_dev,
                    "per_rep": est.per_rep,
                    "elapsed_ms": elapsed_ms,
                })
            );
            Ok(())
        }
        SimCommand::Rum {
            pair,
            p,
            reps,
            seed,
        } => {
            let (a, b) = load_pair(&pair)?;
            if a.is_empty() != b.is_empty() {
                eprintln!("warning: one document has no shingles; similarity degenerates to 0");
            }
            let start = Instant::now();
            let est = rum_repeated(&a, &b, p, reps, seed)?;
            let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
            println!(
                "{}",
                json!({
                    "mean": est.mean,
                    "std": est.std_dev,
                    "per_rep": est.per_rep,
                    "elapsed_ms": elapsed_ms,
                })
            );
            Ok(())
        }
    }
}
