use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use genmatch::batch::Backend;
use genmatch::bench::{
    default_sweep_counts, run_bench, run_sweep, write_bench_csv, QuerySource, ReferenceSource,
    RunConfig, SweepConfig,
};
use genmatch::fasta::{read_fasta, write_fasta, NonAcgtPolicy};
use genmatch::index_io::write_index;
use genmatch::querygen::{gen_queries, QueryGenSpec};
use genmatch::suffix_array::build_dc3;

#[derive(Parser)]
#[command(
    name = "genmatch",
    version,
    about = "Exact DNA sequence matching with suffix-array and suffix-tree indexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a suffix-array index from a reference FASTA
    Build {
        /// Reference FASTA (first record)
        #[arg(long)]
        reference: PathBuf,
        /// Output index file (GSA1 format)
        #[arg(long)]
        out: PathBuf,
        /// Handling of non-ACGT characters
        #[arg(long, value_enum, default_value_t = PolicyArg::Error)]
        non_acgt: PolicyArg,
    },
    /// Match queries against a prebuilt index and write a result TSV
    Search {
        /// Index file produced by `build`
        #[arg(long)]
        index: PathBuf,
        /// Queries FASTA path, or the literal `generated` to synthesize
        /// queries from the indexed reference
        #[arg(long)]
        queries: String,
        #[arg(long, value_enum, default_value_t = BackendArg::Sa)]
        backend: BackendArg,
        #[arg(long, default_value_t = 1, value_parser = at_least_one)]
        workers: usize,
        #[arg(long, default_value_t = 64, value_parser = at_least_one)]
        tile_len: usize,
        /// Output TSV path
        #[arg(long)]
        out: PathBuf,
        /// Add a fifth TSV column with the occurrence positions
        #[arg(long)]
        positions: bool,
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, value_enum, default_value_t = PolicyArg::Error)]
        non_acgt: PolicyArg,
    },
    /// Generate a reproducible query FASTA from a reference
    GenQueries {
        /// Reference FASTA (first record)
        #[arg(long)]
        reference: PathBuf,
        #[command(flatten)]
        gen: GenArgs,
        /// Output FASTA path
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = PolicyArg::Error)]
        non_acgt: PolicyArg,
    },
    /// Sweep query-set sizes and record the timing decomposition per run
    Bench {
        /// Reference FASTA (first record)
        #[arg(long)]
        reference: PathBuf,
        /// Comma-separated query counts; default 512 doubling to 131072
        #[arg(long, value_delimiter = ',')]
        sweep: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = BenchBackendArg::Both)]
        backend: BenchBackendArg,
        #[arg(long, default_value_t = 1, value_parser = at_least_one)]
        workers: usize,
        #[arg(long, default_value_t = 64, value_parser = at_least_one)]
        tile_len: usize,
        /// Structured JSON report path
        #[arg(long)]
        report: PathBuf,
        /// CSV table path
        #[arg(long)]
        csv: PathBuf,
        /// Use only the first N reference symbols (0 = whole reference)
        #[arg(long, default_value_t = 1_000_000)]
        ref_prefix: usize,
        /// Query length
        #[arg(long, default_value_t = 1024, value_parser = at_least_one)]
        length: usize,
        #[arg(long, default_value_t = 0.5, value_parser = unit_interval)]
        mix_ratio: f64,
        #[arg(long, default_value_t = 0.0, value_parser = unit_interval)]
        mutation_rate: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PolicyArg::Error)]
        non_acgt: PolicyArg,
    },
}

/// Generation parameters shared by `search --queries generated` and
/// `gen-queries`.
#[derive(Args)]
struct GenArgs {
    /// Number of queries
    #[arg(long, default_value_t = 512, value_parser = at_least_one)]
    count: usize,
    /// Symbols per query
    #[arg(long, default_value_t = 1024, value_parser = at_least_one)]
    length: usize,
    /// Fraction of queries sampled from the reference
    #[arg(long, default_value_t = 0.5, value_parser = unit_interval)]
    mix_ratio: f64,
    /// Per-symbol substitution probability for sampled queries
    #[arg(long, default_value_t = 0.0, value_parser = unit_interval)]
    mutation_rate: f64,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GenArgs {
    fn spec(&self) -> QueryGenSpec {
        QueryGenSpec {
            count: self.count,
            length: self.length,
            mix_ratio: self.mix_ratio,
            mutation_rate: self.mutation_rate,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Sa,
    Tree,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Sa => Backend::SuffixArray,
            BackendArg::Tree => Backend::SuffixTree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchBackendArg {
    Sa,
    Tree,
    Both,
}

impl BenchBackendArg {
    fn backends(self) -> Vec<Backend> {
        match self {
            BenchBackendArg::Sa => vec![Backend::SuffixArray],
            BenchBackendArg::Tree => vec![Backend::SuffixTree],
            BenchBackendArg::Both => vec![Backend::SuffixArray, Backend::SuffixTree],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Error,
    Skip,
}

impl From<PolicyArg> for NonAcgtPolicy {
    fn from(p: PolicyArg) -> NonAcgtPolicy {
        match p {
            PolicyArg::Error => NonAcgtPolicy::Error,
            PolicyArg::Skip => NonAcgtPolicy::Skip,
        }
    }
}

fn at_least_one(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("'{}' is not a number", s))?;
    if v == 0 {
        return Err("must be at least 1".to_string());
    }
    Ok(v)
}

fn unit_interval(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{}' is not a number", s))?;
    if !(0.0..=1.0).contains(&v) {
        return Err("must lie in 0..=1".to_string());
    }
    Ok(v)
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e);
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Build {
            reference,
            out,
            non_acgt,
        } => {
            let record = read_fasta(&reference, non_acgt.into())?;
            let sa = build_dc3(&record.seq)?;
            write_index(&sa, &record.seq, &out)?;
            println!(
                "indexed record '{}': {} symbols -> {}",
                record.id,
                record.seq.len(),
                out.display()
            );
        }
        Command::Search {
            index,
            queries,
            backend,
            workers,
            tile_len,
            out,
            positions,
            gen,
            non_acgt,
        } => {
            let query_source = if queries == "generated" {
                QuerySource::Generate(gen.spec())
            } else {
                QuerySource::Fasta(PathBuf::from(queries))
            };
            let cfg = RunConfig {
                reference: ReferenceSource::Index(index),
                ref_prefix: None,
                queries: query_source,
                backend: backend.into(),
                workers,
                tile_len,
                out_tsv: Some(out.clone()),
                with_positions: positions,
                policy: non_acgt.into(),
            };
            let report = run_bench(&cfg)?;
            println!(
                "{} matched {}/{} queries (n={}, workers={}): input {:.4}s kernel {:.4}s output {:.4}s -> {}",
                report.backend,
                report.matched,
                report.query_count,
                report.n,
                report.workers,
                report.input_s,
                report.kernel_s,
                report.output_s,
                out.display()
            );
        }
        Command::GenQueries {
            reference,
            gen,
            out,
            non_acgt,
        } => {
            let record = read_fasta(&reference, non_acgt.into())?;
            let spec = gen.spec();
            let queries = gen_queries(&record.seq, &spec)?;
            let ids: Vec<String> = (0..queries.len()).map(|q| format!("q{}", q)).collect();
            write_fasta(
                &out,
                ids.iter()
                    .map(String::as_str)
                    .zip(queries.queries().iter()),
            )?;
            println!(
                "wrote {} queries of length {} (seed {}) -> {}",
                queries.len(),
                spec.length,
                spec.seed,
                out.display()
            );
        }
        Command::Bench {
            reference,
            sweep,
            backend,
            workers,
            tile_len,
            report,
            csv,
            ref_prefix,
            length,
            mix_ratio,
            mutation_rate,
            seed,
            non_acgt,
        } => {
            let cfg = SweepConfig {
                reference,
                ref_prefix: (ref_prefix > 0).then_some(ref_prefix),
                counts: sweep.unwrap_or_else(default_sweep_counts),
                backends: backend.backends(),
                workers,
                tile_len,
                query_len: length,
                mix_ratio,
                mutation_rate,
                seed,
                policy: non_acgt.into(),
            };
            let reports = run_sweep(&cfg, |r| {
                println!(
                    "{:>4} n={} Q={:>8} input {:.4}s kernel {:.4}s output {:.4}s total {:.4}s",
                    r.backend, r.n, r.query_count, r.input_s, r.kernel_s, r.output_s, r.total_s
                );
            })?;

            let mut csv_file = BufWriter::new(File::create(&csv)?);
            write_bench_csv(&mut csv_file, &reports)?;
            csv_file.flush()?;

            let mut report_file = BufWriter::new(File::create(&report)?);
            serde_json::to_writer_pretty(&mut report_file, &reports)?;
            report_file.write_all(b"\n")?;
            report_file.flush()?;

            println!(
                "wrote {} runs -> {} and {}",
                reports.len(),
                csv.display(),
                report.display()
            );
        }
    }
    Ok(())
}
