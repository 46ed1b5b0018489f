//! Reproducible query-set generation.
//!
//! A fraction of the queries are substrings sampled from the reference at
//! uniform random offsets, optionally mutated per symbol; the rest are
//! uniform random over the alphabet, standing in for sequences drawn from
//! an unrelated genome. Generation is single-threaded and fully determined
//! by the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{EncodedSequence, QuerySet};

/// Name of the generator, recorded in reports so runs can be reproduced.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Parameters of one generated query set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QueryGenSpec {
    /// Number of queries.
    pub count: usize,
    /// Symbols per query.
    pub length: usize,
    /// Fraction of queries sampled from the reference, in 0..=1; the
    /// remainder are random.
    pub mix_ratio: f64,
    /// Per-symbol substitution probability applied to sampled queries.
    /// A substitution always picks a different symbol.
    pub mutation_rate: f64,
    pub seed: u64,
}

impl Default for QueryGenSpec {
    fn default() -> Self {
        QueryGenSpec {
            count: 512,
            length: 1024,
            mix_ratio: 0.5,
            mutation_rate: 0.0,
            seed: 0,
        }
    }
}

/// Generates `spec.count` queries of `spec.length` symbols each.
///
/// The first `floor(mix_ratio * count)` queries are reference substrings
/// (mutated at `mutation_rate`), the rest uniform random. Identical specs
/// produce identical query sets.
pub fn gen_queries(reference: &EncodedSequence, spec: &QueryGenSpec) -> Result<QuerySet> {
    let n = reference.len();
    let m = spec.length;
    let sampled = ((spec.mix_ratio.clamp(0.0, 1.0)) * spec.count as f64).floor() as usize;
    let sampled = sampled.min(spec.count);
    if sampled > 0 && n < m {
        return Err(Error::ReferenceTooShort {
            reference: n,
            needed: m,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut queries = Vec::with_capacity(spec.count);
    for _ in 0..sampled {
        let offset = rng.gen_range(0..=n - m);
        let mut codes = reference.codes()[offset..offset + m].to_vec();
        if spec.mutation_rate > 0.0 {
            for c in codes.iter_mut() {
                if rng.gen::<f64>() < spec.mutation_rate {
                    let shift = rng.gen_range(1..=3u8);
                    *c = (*c - 1 + shift) % 4 + 1;
                }
            }
        }
        queries.push(EncodedSequence::from_codes(codes).expect("codes stay in range"));
    }
    for _ in sampled..spec.count {
        let codes: Vec<u8> = (0..m).map(|_| rng.gen_range(1..=4)).collect();
        queries.push(EncodedSequence::from_codes(codes).expect("codes stay in range"));
    }
    Ok(QuerySet::new(queries))
}
