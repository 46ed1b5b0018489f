//! A desk-scale benchmark sweep with the input/kernel/output decomposition.
//!
//! ```bash
//! cargo run --release -p genmatch --example bench_sweep
//! ```

use genmatch::batch::Backend;
use genmatch::bench::{run_sweep, speedup_report, write_bench_csv, SweepConfig};
use genmatch::fasta::{write_fasta, NonAcgtPolicy};
use genmatch::seq::EncodedSequence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // synthesize a reference FASTA to benchmark against
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let codes: Vec<u8> = (0..200_000).map(|_| rng.gen_range(1..=4)).collect();
    let reference = EncodedSequence::from_codes(codes)?;
    let ref_path = std::env::temp_dir().join("genmatch-bench-ref.fa");
    write_fasta(&ref_path, [("synthetic", &reference)])?;

    let cfg = SweepConfig {
        reference: ref_path.clone(),
        ref_prefix: None,
        counts: vec![512, 2048, 8192],
        backends: vec![Backend::SuffixArray, Backend::SuffixTree],
        workers: 2,
        tile_len: 64,
        query_len: 256,
        mix_ratio: 0.5,
        mutation_rate: 0.0,
        seed: 11,
        policy: NonAcgtPolicy::Error,
    };

    let reports = run_sweep(&cfg, |r| {
        println!(
            "{:>4} Q={:>5} input {:.4}s kernel {:.4}s output {:.4}s (index {} bytes)",
            r.backend, r.query_count, r.input_s, r.kernel_s, r.output_s, r.index_bytes
        );
    })?;

    println!("\nCSV form:");
    let mut csv = Vec::new();
    write_bench_csv(&mut csv, &reports)?;
    print!("{}", String::from_utf8(csv).expect("csv is ascii"));

    // phase ratios between the two backends on the largest workload
    let sa_run = &reports[2];
    let tree_run = &reports[5];
    let speedup = speedup_report(sa_run, tree_run)?;
    println!(
        "\nsa vs tree at Q={}: kernel ratio {:.2}, total ratio {:.2}",
        sa_run.query_count, speedup.kernel_ratio, speedup.total_ratio
    );
    println!(
        "index bytes: sa {} vs tree {} ({:.2}x)",
        sa_run.index_bytes,
        tree_run.index_bytes,
        tree_run.index_bytes as f64 / sa_run.index_bytes as f64
    );

    std::fs::remove_file(&ref_path)?;
    Ok(())
}
