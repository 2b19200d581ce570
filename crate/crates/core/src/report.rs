//! Corpus driver: pairwise similarity over a directory of documents,
//! with the random baseline and significance flag attached to each pair,
//! and JSON/CSV emission.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minhash::rum_repeated;
use crate::random_baseline::expected_similarity;
use crate::sampling::{gc_estimate, SubsampleSpec};
use crate::seeding::tagged_seed;
use crate::shingling::{shingle, stream_shingle, ShingleSequence};
use crate::similarity_exact::multiplicity_oracle;
use crate::text_ingest::EditedDocument;

/// Environment variable capping the number of worker threads used for
/// pairwise evaluation.
pub const WORKERS_ENV: &str = "SHINGLE_SIM_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "exact-stream")]
    ExactStream,
    #[serde(rename = "gc")]
    Gc,
    #[serde(rename = "rum")]
    Rum,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::ExactStream => "exact-stream",
            Method::Gc => "gc",
            Method::Rum => "rum",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "stream" | "exact-stream" => Ok(Method::ExactStream),
            "gc" => Ok(Method::Gc),
            "rum" => Ok(Method::Rum),
            other => Err(Error::usage(format!(
                "unknown method '{other}' (expected exact|stream|gc|rum)"
            ))),
        }
    }
}

/// Parameters of one corpus run; unused fields are ignored by methods
/// that do not need them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodParams {
    pub k: usize,
    pub ng: usize,
    pub p: usize,
    pub reps: usize,
    pub seed: u64,
}

impl Default for MethodParams {
    fn default() -> Self {
        MethodParams {
            k: 3,
            ng: 10_000,
            p: 20,
            reps: 10,
            seed: 0,
        }
    }
}

/// One pairwise comparison, ready for emission.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityReport {
    pub doc_a: String,
    pub doc_b: String,
    pub method: Method,
    pub params: MethodParams,
    pub value: f64,
    pub std_dev: f64,
    pub kc: Option<u64>,
    pub elapsed_ms: f64,
    pub baseline: f64,
    pub significant: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::usage(format!(
                "unknown format '{other}' (expected json|csv)"
            ))),
        }
    }
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|source| Error::Ingest {
            path: dir.to_path_buf(),
            source,
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && !p
                    .file_name()
                    .map(|n| n.to_string_lossy().starts_with('.'))
                    .unwrap_or(true)
        })
        .collect();
    files.sort();
    Ok(files)
}

struct PreparedDocument {
    id: String,
    shingles: ShingleSequence,
}

fn prepare(path: &Path, method: Method, k: usize) -> Result<PreparedDocument> {
    let doc = EditedDocument::load(path)?;
    let shingles = match method {
        // The streaming route consumes the document line by line with
        // carry-over; all other routes shingle the joined text.
        Method::ExactStream => stream_shingle(&doc.lines, k)?,
        _ => shingle(&doc.text(), k)?,
    };
    Ok(PreparedDocument {
        id: doc.id,
        shingles,
    })
}

/// Similarity of one prepared pair by the chosen method.
pub fn compare_pair(
    a: &ShingleSequence,
    b: &ShingleSequence,
    method: Method,
    params: &MethodParams,
    pair_seed: u64,
) -> Result<(f64, f64, Option<u64>)> {
    match method {
        Method::Exact | Method::ExactStream => {
            let r = multiplicity_oracle(a, b)?;
            Ok((r.similarity, 0.0, Some(r.kc as u64)))
        }
        Method::Gc => {
            let spec = SubsampleSpec::new(params.ng, params.reps, pair_seed)?;
            let est = gc_estimate(a, b, &spec)?;
            Ok((est.mean, est.std_dev, None))
        }
        Method::Rum => {
            let est = rum_repeated(a, b, params.p, params.reps, pair_seed)?;
            Ok((est.mean, est.std_dev, None))
        }
    }
}

/// Pairwise similarity reports for every unordered document pair in a
/// directory, sorted by (doc_a, doc_b). Parallelism is capped by the
/// `SHINGLE_SIM_WORKERS` environment variable.
pub fn pairwise_matrix(
    corpus_dir: &Path,
    method: Method,
    params: &MethodParams,
) -> Result<Vec<SimilarityReport>> {
    let files = corpus_files(corpus_dir)?;
    if files.len() < 2 {
        return Err(Error::usage(format!(
            "corpus directory {} holds {} readable documents; need at least 2",
            corpus_dir.display(),
            files.len()
        )));
    }
    let mut docs = files
        .iter()
        .map(|p| prepare(p, method, params.k))
        .collect::<Result<Vec<_>>>()?;
    docs.sort_by(|a, b| a.id.cmp(&b.id));

    let pairs: Vec<(usize, usize)> = (0..docs.len())
        .flat_map(|i| (i + 1..docs.len()).map(move |j| (i, j)))
        .collect();

    let run = || -> Result<Vec<SimilarityReport>> {
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (a, b) = (&docs[i], &docs[j]);
                let pair_seed = tagged_seed(params.seed, &format!("{}|{}", a.id, b.id), 0);
                let start = Instant::now();
                let (value, std_dev, kc) =
                    compare_pair(&a.shingles, &b.shingles, method, params, pair_seed)?;
                let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
                let (n_a, n_b) = (a.shingles.len() as u64, b.shingles.len() as u64);
                let baseline = expected_similarity(n_a + n_b, n_a, n_b)?;
                Ok(SimilarityReport {
                    doc_a: a.id.clone(),
                    doc_b: b.id.clone(),
                    method,
                    params: *params,
                    value,
                    std_dev,
                    kc,
                    elapsed_ms,
                    baseline,
                    significant: value > baseline,
                })
            })
            .collect()
    };

    let mut reports = match workers_from_env() {
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::usage(format!("bad {WORKERS_ENV}: {e}")))?
            .install(run),
        None => run(),
    }?;
    reports.sort_by(|a, b| (&a.doc_a, &a.doc_b).cmp(&(&b.doc_a, &b.doc_b)));
    Ok(reports)
}

fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&w| w > 0)
}

/// Write reports as a JSON array or as CSV with fixed header and
/// 4-decimal numbers. Field and row order are deterministic.
pub fn emit(reports: &[SimilarityReport], format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)?;
            out.write_all(b"\n")?;
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record([
                "doc_a",
                "doc_b",
                "method",
                "k",
                "value",
                "std_dev",
                "kc",
                "elapsed_ms",
                "baseline",
                "significant",
            ])?;
            for r in reports {
                writer.write_record([
                    r.doc_a.clone(),
                    r.doc_b.clone(),
                    r.method.as_str().to_string(),
                    r.params.k.to_string(),
                    format!("{:.4}", r.value),
                    format!("{:.4}", r.std_dev),
                    r.kc.map(|kc| kc.to_string()).unwrap_or_default(),
                    format!("{:.4}", r.elapsed_ms),
                    format!("{:.4}", r.baseline),
                    r.significant.to_string(),
                ])?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}
