//! Reproducible query-set generation against a reference.
//!
//! ```bash
//! cargo run -p genmatch --example generate_queries
//! ```

use genmatch::batch::{match_batch, Backend, Index, MatcherConfig};
use genmatch::querygen::{gen_queries, QueryGenSpec, RNG_ALGORITHM};
use genmatch::seq::{decode_sequence, EncodedSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> genmatch::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    let codes: Vec<u8> = (0..10_000).map(|_| rng.gen_range(1..=4)).collect();
    let reference = EncodedSequence::from_codes(codes)?;

    let spec = QueryGenSpec {
        count: 8,
        length: 20,
        mix_ratio: 0.5,
        mutation_rate: 0.05,
        seed: 42,
    };
    println!("spec: {:?} (rng: {})", spec, RNG_ALGORITHM);

    let queries = gen_queries(&reference, &spec)?;
    for (i, q) in queries.queries().iter().enumerate() {
        let kind = if i < 4 { "sampled" } else { "random " };
        println!("  q{} ({}) {}", i, kind, decode_sequence(q.codes())?);
    }

    // the same spec always produces the same queries
    let again = gen_queries(&reference, &spec)?;
    let identical = queries
        .queries()
        .iter()
        .zip(again.queries())
        .all(|(a, b)| a.codes() == b.codes());
    println!("regenerated with the same seed, identical: {}", identical);

    // unmutated sampled queries always match; random ones of this length
    // almost never do
    let exact = QueryGenSpec {
        mutation_rate: 0.0,
        ..spec
    };
    let queries = gen_queries(&reference, &exact)?;
    let index = Index::build(&reference, Backend::SuffixArray)?;
    let res = match_batch(&index, &reference, &queries, &MatcherConfig::default())?;
    println!(
        "with mutation_rate 0: {}/{} queries match (first {} are reference substrings)",
        res.matched(),
        res.query_count(),
        4
    );
    Ok(())
}
