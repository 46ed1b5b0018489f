//! Matching a whole query batch concurrently, with deterministic results.
//!
//! ```bash
//! cargo run --release -p genmatch --example batch_workers
//! ```

use std::time::Instant;

use genmatch::batch::{match_batch, result_rows, Backend, Index, MatcherConfig};
use genmatch::querygen::{gen_queries, QueryGenSpec};
use genmatch::seq::{encode_sequence, EncodedSequence, QuerySet};
use genmatch::suffix_array::build_dc3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> genmatch::Result<()> {
    // the flat result layout on a tiny batch
    let text = encode_sequence("acggtacgtac")?;
    let index = Index::build(&text, Backend::SuffixArray)?;
    let queries = QuerySet::new(vec![
        encode_sequence("a")?,
        encode_sequence("c")?,
        encode_sequence("tac")?,
        encode_sequence("tt")?,
    ]);
    let res = match_batch(&index, &text, &queries, &MatcherConfig::default())?;
    println!("flat result (LB, RB per query): {:?}", res.flat());
    let sa = build_dc3(&text)?;
    for row in result_rows(&res, &sa, true) {
        println!(
            "  q{} lb={} rb={} count={} positions={:?}",
            row.query_id,
            row.lb,
            row.rb,
            row.count,
            row.positions.unwrap()
        );
    }

    // a larger batch: worker count changes wall time, never results
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let codes: Vec<u8> = (0..400_000).map(|_| rng.gen_range(1..=4)).collect();
    let reference = EncodedSequence::from_codes(codes)?;
    let index = Index::build(&reference, Backend::SuffixArray)?;
    let batch = gen_queries(
        &reference,
        &QueryGenSpec {
            count: 20_000,
            length: 64,
            mix_ratio: 0.5,
            mutation_rate: 0.01,
            seed: 7,
        },
    )?;

    println!("\n{} queries against {} symbols:", batch.len(), reference.len());
    let mut baseline: Option<Vec<i64>> = None;
    for workers in [1, 2, 4, 8] {
        let cfg = MatcherConfig {
            workers,
            ..MatcherConfig::default()
        };
        let start = Instant::now();
        let res = match_batch(&index, &reference, &batch, &cfg)?;
        let elapsed = start.elapsed().as_secs_f64();
        let identical = match &baseline {
            Some(flat) => flat == res.flat(),
            None => {
                baseline = Some(res.flat().to_vec());
                true
            }
        };
        println!(
            "  workers = {}: {:.3}s, matched {}/{}, identical to 1-worker run: {}",
            workers,
            elapsed,
            res.matched(),
            res.query_count(),
            identical
        );
    }
    Ok(())
}
