//! Benchmark harness with input/kernel/output timing decomposition.
//!
//! A run has three strictly sequential timed phases:
//!
//! * input — reference load (FASTA read or index-file load), index
//!   construction, and query load or generation;
//! * kernel — [`match_batch`] only;
//! * output — result serialization to TSV.
//!
//! `total_s` is the exact sum of the three. Kernel time is what the two
//! index structures are contrasted on; input time is where their size
//! difference shows up.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::batch::{match_batch, result_rows, Backend, Index, MatcherConfig, ResultRow};
use crate::error::{Error, Result};
use crate::fasta::{read_fasta, read_fasta_queries, NonAcgtPolicy};
use crate::index_io::read_index;
use crate::querygen::{gen_queries, QueryGenSpec, RNG_ALGORITHM};
use crate::seq::{EncodedSequence, QuerySet};
use crate::suffix_array::{build_dc3, rank_array, SuffixArray};
use crate::suffix_tree::build_tree;

/// Where the reference text comes from.
#[derive(Debug, Clone)]
pub enum ReferenceSource {
    /// First record of a FASTA file; the index is built during the run.
    Fasta(PathBuf),
    /// A prebuilt `GSA1` index file holding both codes and positions.
    Index(PathBuf),
}

/// Where the queries come from.
#[derive(Debug, Clone)]
pub enum QuerySource {
    /// Every record of a FASTA file is one query.
    Fasta(PathBuf),
    /// Seeded generation against the loaded reference.
    Generate(QueryGenSpec),
}

/// One benchmark or search run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub reference: ReferenceSource,
    /// Truncate a FASTA reference to its first `ref_prefix` symbols.
    /// Ignored for prebuilt indexes.
    pub ref_prefix: Option<usize>,
    pub queries: QuerySource,
    pub backend: Backend,
    pub workers: usize,
    pub tile_len: usize,
    /// Results TSV destination; `None` serializes to a sink so the output
    /// phase is still measured.
    pub out_tsv: Option<PathBuf>,
    pub with_positions: bool,
    pub policy: NonAcgtPolicy,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            reference: ReferenceSource::Fasta(PathBuf::new()),
            ref_prefix: None,
            queries: QuerySource::Generate(QueryGenSpec::default()),
            backend: Backend::SuffixArray,
            workers: 1,
            tile_len: crate::search::SearchConfig::DEFAULT_TILE_LEN,
            out_tsv: None,
            with_positions: false,
            policy: NonAcgtPolicy::Error,
        }
    }
}

/// Wall-time decomposition and metadata of one run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TimingReport {
    pub backend: String,
    /// Reference length in symbols.
    pub n: u64,
    pub query_count: u64,
    /// Query length when all queries share one.
    pub query_len: Option<u64>,
    pub workers: usize,
    pub tile_len: usize,
    pub input_s: f64,
    pub kernel_s: f64,
    pub output_s: f64,
    pub total_s: f64,
    /// In-memory size of the index structure used by the kernel.
    pub index_bytes: u64,
    /// Queries with at least one occurrence.
    pub matched: u64,
    /// Generator name when the queries were generated.
    pub rng: Option<String>,
    /// Generation parameters when the queries were generated.
    pub query_gen: Option<QueryGenSpec>,
}

/// Phase-by-phase ratios of two runs over the same workload
/// (baseline / candidate; above 1 means the candidate is faster).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SpeedupReport {
    pub input_ratio: f64,
    pub kernel_ratio: f64,
    pub output_ratio: f64,
    pub total_ratio: f64,
}

/// Executes one run: input, kernel, output, in order.
pub fn run_bench(cfg: &RunConfig) -> Result<TimingReport> {
    // input phase: reference, index, queries
    let input_start = Instant::now();
    let (text, loaded_sa) = load_reference(cfg)?;
    let index = build_index(cfg.backend, &text, loaded_sa)?;
    let queries = load_queries(cfg, &text)?;
    let input_s = input_start.elapsed().as_secs_f64();

    // kernel phase: matching only
    let matcher = MatcherConfig {
        workers: cfg.workers,
        tile_len: cfg.tile_len,
        backend: cfg.backend,
    };
    let kernel_start = Instant::now();
    let result = match_batch(&index, &text, &queries, &matcher)?;
    let kernel_s = kernel_start.elapsed().as_secs_f64();

    // output phase: tabulate and serialize
    let output_start = Instant::now();
    let rows = match &index {
        Index::Array(sa) => result_rows(&result, sa, cfg.with_positions),
        Index::Tree { .. } if cfg.with_positions => {
            // positions require the suffix array; rebuild it outside the
            // timed kernel only when actually requested
            let sa = build_dc3(&text)?;
            result_rows(&result, &sa, true)
        }
        Index::Tree { .. } => {
            let placeholder = SuffixArray::from_positions(Vec::new());
            result_rows(&result, &placeholder, false)
        }
    };
    match &cfg.out_tsv {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_results_tsv(&mut w, &rows)?;
            w.flush()?;
        }
        None => {
            write_results_tsv(&mut std::io::sink(), &rows)?;
        }
    }
    let output_s = output_start.elapsed().as_secs_f64();

    let (rng, query_gen) = match &cfg.queries {
        QuerySource::Generate(spec) => (Some(RNG_ALGORITHM.to_string()), Some(*spec)),
        QuerySource::Fasta(_) => (None, None),
    };
    Ok(TimingReport {
        backend: cfg.backend.label().to_string(),
        n: text.len() as u64,
        query_count: queries.len() as u64,
        query_len: queries.uniform_length().map(|m| m as u64),
        workers: cfg.workers,
        tile_len: cfg.tile_len,
        input_s,
        kernel_s,
        output_s,
        total_s: input_s + kernel_s + output_s,
        index_bytes: index.index_bytes() as u64,
        matched: result.matched() as u64,
        rng,
        query_gen,
    })
}

fn load_reference(cfg: &RunConfig) -> Result<(EncodedSequence, Option<SuffixArray>)> {
    match &cfg.reference {
        ReferenceSource::Fasta(path) => {
            let record = read_fasta(path, cfg.policy)?;
            let text = match cfg.ref_prefix {
                Some(prefix) if prefix < record.seq.len() => {
                    EncodedSequence::from_codes(record.seq.codes()[..prefix].to_vec())
                        .expect("codes are validated")
                }
                _ => record.seq,
            };
            Ok((text, None))
        }
        ReferenceSource::Index(path) => {
            let (sa, text) = read_index(path)?;
            Ok((text, Some(sa)))
        }
    }
}

fn build_index(
    backend: Backend,
    text: &EncodedSequence,
    loaded_sa: Option<SuffixArray>,
) -> Result<Index> {
    match backend {
        Backend::SuffixArray => {
            let sa = match loaded_sa {
                Some(sa) => sa,
                None => build_dc3(text)?,
            };
            Ok(Index::Array(sa))
        }
        Backend::SuffixTree => {
            let tree = build_tree(text)?;
            let sa = match loaded_sa {
                Some(sa) => sa,
                None => build_dc3(text)?,
            };
            Ok(Index::Tree {
                tree,
                rank: rank_array(&sa),
            })
        }
    }
}

fn load_queries(cfg: &RunConfig, text: &EncodedSequence) -> Result<QuerySet> {
    match &cfg.queries {
        QuerySource::Fasta(path) => read_fasta_queries(path, cfg.policy),
        QuerySource::Generate(spec) => gen_queries(text, spec),
    }
}

/// Writes result rows as TSV. The `positions` column appears only when the
/// rows carry positions.
pub fn write_results_tsv<W: Write>(w: &mut W, rows: &[ResultRow]) -> Result<()> {
    let with_positions = rows.first().is_some_and(|r| r.positions.is_some());
    if with_positions {
        writeln!(w, "query_id\tlb\trb\tcount\tpositions")?;
    } else {
        writeln!(w, "query_id\tlb\trb\tcount")?;
    }
    for row in rows {
        match &row.positions {
            Some(positions) => {
                let joined: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
                writeln!(
                    w,
                    "{}\t{}\t{}\t{}\t{}",
                    row.query_id,
                    row.lb,
                    row.rb,
                    row.count,
                    joined.join(",")
                )?;
            }
            None => writeln!(w, "{}\t{}\t{}\t{}", row.query_id, row.lb, row.rb, row.count)?,
        }
    }
    Ok(())
}

/// Writes one CSV row per report, mirroring the timing tables.
pub fn write_bench_csv<W: Write>(w: &mut W, reports: &[TimingReport]) -> Result<()> {
    writeln!(
        w,
        "backend,n,Q,m,workers,tile_len,input_s,kernel_s,output_s,total_s,index_bytes"
    )?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6},{}",
            r.backend,
            r.n,
            r.query_count,
            r.query_len.map_or(String::new(), |m| m.to_string()),
            r.workers,
            r.tile_len,
            r.input_s,
            r.kernel_s,
            r.output_s,
            r.total_s,
            r.index_bytes
        )?;
    }
    Ok(())
}

/// Per-phase speedup of `candidate` relative to `baseline`.
///
/// Both reports must describe the same workload (n, Q, m). Phases that are
/// bit-identical (including two zero timings) report ratio 1.
pub fn speedup_report(baseline: &TimingReport, candidate: &TimingReport) -> Result<SpeedupReport> {
    if baseline.n != candidate.n
        || baseline.query_count != candidate.query_count
        || baseline.query_len != candidate.query_len
    {
        return Err(Error::WorkloadMismatch);
    }
    fn ratio(b: f64, c: f64) -> f64 {
        if b == c {
            1.0
        } else {
            b / c
        }
    }
    Ok(SpeedupReport {
        input_ratio: ratio(baseline.input_s, candidate.input_s),
        kernel_ratio: ratio(baseline.kernel_s, candidate.kernel_s),
        output_ratio: ratio(baseline.output_s, candidate.output_s),
        total_ratio: ratio(baseline.total_s, candidate.total_s),
    })
}

/// Query-count sweep over one reference, one run per (count, backend).
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub reference: PathBuf,
    pub ref_prefix: Option<usize>,
    pub counts: Vec<usize>,
    pub backends: Vec<Backend>,
    pub workers: usize,
    pub tile_len: usize,
    pub query_len: usize,
    pub mix_ratio: f64,
    pub mutation_rate: f64,
    pub seed: u64,
    pub policy: NonAcgtPolicy,
}

/// The query-set sizes benchmarked by default: 512 doubling to 131072.
pub fn default_sweep_counts() -> Vec<usize> {
    (0..9).map(|i| 512usize << i).collect()
}

/// Runs the full sweep and returns one report per run, grouped by backend
/// in the order given, counts ascending within each backend.
pub fn run_sweep<F>(cfg: &SweepConfig, mut on_report: F) -> Result<Vec<TimingReport>>
where
    F: FnMut(&TimingReport),
{
    let mut reports = Vec::with_capacity(cfg.counts.len() * cfg.backends.len());
    for &backend in &cfg.backends {
        for &count in &cfg.counts {
            let run = RunConfig {
                reference: ReferenceSource::Fasta(cfg.reference.clone()),
                ref_prefix: cfg.ref_prefix,
                queries: QuerySource::Generate(QueryGenSpec {
                    count,
                    length: cfg.query_len,
                    mix_ratio: cfg.mix_ratio,
                    mutation_rate: cfg.mutation_rate,
                    seed: cfg.seed,
                }),
                backend,
                workers: cfg.workers,
                tile_len: cfg.tile_len,
                out_tsv: None,
                with_positions: false,
                policy: cfg.policy,
            };
            let report = run_bench(&run)?;
            on_report(&report);
            reports.push(report);
        }
    }
    Ok(reports)
}
