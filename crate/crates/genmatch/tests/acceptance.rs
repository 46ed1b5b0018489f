//! Acceptance suite: one test per criterion, each printing one line.
//!
//! Run with output visible:
//!
//! ```bash
//! cargo test -p genmatch --test acceptance -- --nocapture
//! ```
//!
//! Criteria 1..=10 are hard assertions. Criterion 11 is a reported scaling
//! measurement: desk hardware varies, so it prints SOFT-PASS/SOFT-MISS and
//! never fails the suite.

use std::collections::BTreeMap;
use std::time::Instant;

use genmatch::batch::{match_batch, Backend, Index, MatcherConfig};
use genmatch::querygen::{gen_queries, QueryGenSpec};
use genmatch::search::{
    find_lb_instrumented, find_range, find_rb_instrumented, tree_find, SearchConfig,
};
use genmatch::seq::{encode_sequence, EncodedSequence};
use genmatch::suffix_array::{build_dc3, build_dc3_trace, build_naive};
use genmatch::suffix_tree::{build_tree, tree_stats, NO_NODE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORKED_TEXT: &str = "acggtacgtac";
const WORKED_SA: [u32; 11] = [9, 0, 5, 10, 1, 6, 2, 7, 3, 8, 4];

fn pass(criterion: u32, detail: &str) {
    println!("PASS — criterion {}: {}", criterion, detail);
}

fn random_seq(rng: &mut ChaCha8Rng, len: usize) -> EncodedSequence {
    let codes: Vec<u8> = (0..len).map(|_| rng.gen_range(1..=4)).collect();
    EncodedSequence::from_codes(codes).unwrap()
}

/// Seeded (text, pattern) cases shared by the search-oracle, the
/// cross-structure, and the iteration-bound criteria: texts up to 5000
/// symbols, patterns up to 32, roughly half sampled from the text.
fn search_cases(count: usize, seed: u64) -> Vec<(EncodedSequence, EncodedSequence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let tlen = rng.gen_range(1..=5000);
            let text = random_seq(&mut rng, tlen);
            let plen = rng.gen_range(1..=32);
            let pattern = if rng.gen_bool(0.5) && tlen >= plen {
                let at = rng.gen_range(0..=tlen - plen);
                EncodedSequence::from_codes(text.codes()[at..at + plen].to_vec()).unwrap()
            } else {
                random_seq(&mut rng, plen)
            };
            (text, pattern)
        })
        .collect()
}

/// Independent O(n * m) scan oracle.
fn scan_occurrences(text: &EncodedSequence, pattern: &EncodedSequence) -> Vec<u32> {
    let t = text.codes();
    let p = pattern.codes();
    if p.is_empty() || p.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - p.len())
        .filter(|&i| &t[i..i + p.len()] == p)
        .map(|i| i as u32)
        .collect()
}

#[test]
fn c01_worked_example_suffix_array() {
    let text = encode_sequence(WORKED_TEXT).unwrap();
    let start = Instant::now();
    let sa = build_dc3(&text).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(sa.positions(), &WORKED_SA);
    assert!(
        elapsed.as_micros() < 1000,
        "construction took {:?}, expected < 1 ms",
        elapsed
    );
    pass(1, &format!("dc3(acggtacgtac) = {:?} in {:?}", WORKED_SA, elapsed));
}

#[test]
fn c02_dc3_trace_tables() {
    let text = encode_sequence(WORKED_TEXT).unwrap();
    let trace = build_dc3_trace(&text).unwrap();
    let expected_sample: BTreeMap<u32, u32> =
        [(1, 3), (2, 4), (4, 7), (5, 1), (7, 5), (8, 6), (10, 2)]
            .into_iter()
            .collect();
    assert_eq!(trace.sample_ranks, expected_sample);
    assert_eq!(
        trace.full_rank_1based,
        vec![2, 5, 7, 9, 11, 3, 6, 8, 10, 1, 4]
    );
    assert_eq!(trace.nonsample_order, vec![9, 0, 6, 3]);
    pass(2, "sample ranks, full ranks, and non-sample order match");
}

#[test]
fn c03_boundary_examples() {
    let text = encode_sequence(WORKED_TEXT).unwrap();
    let sa = build_dc3(&text).unwrap();
    let cfg = SearchConfig::default();
    let expected = [("a", (0, 2)), ("c", (3, 5)), ("ggtac", (6, 6)), ("tac", (9, 10))];
    for (pattern_text, (lb, rb)) in expected {
        let pattern = encode_sequence(pattern_text).unwrap();
        let range = find_range(&sa, &text, &pattern, cfg).unwrap().unwrap();
        assert_eq!((range.lb, range.rb), (lb, rb), "pattern {}", pattern_text);
    }
    pass(3, "boundaries (0,2) (3,5) (6,6) (9,10) for a, c, ggtac, tac");
}

#[test]
fn c04_construction_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xDC3);
    let trials = 500;
    for trial in 0..trials {
        let n = rng.gen_range(1..=5000);
        let text = random_seq(&mut rng, n);
        let dc3 = build_dc3(&text).unwrap();
        let naive = build_naive(&text).unwrap();
        assert_eq!(
            dc3.positions(),
            naive.positions(),
            "mismatch at trial {} (n = {})",
            trial,
            n
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "oracle suite took {:?}, expected < 60 s",
        elapsed
    );
    pass(
        4,
        &format!("dc3 == naive on {} random texts (lengths 1..=5000) in {:?}", trials, elapsed),
    );
}

#[test]
fn c05_search_oracle() {
    let cases = search_cases(1000, 0x5EA2C4);
    let cfg = SearchConfig::default();
    let mut matches = 0usize;
    let mut misses = 0usize;
    for (i, (text, pattern)) in cases.iter().enumerate() {
        let sa = build_dc3(text).unwrap();
        let found: Vec<u32> = match find_range(&sa, text, pattern, cfg).unwrap() {
            Some(r) => {
                let mut v = r.positions(&sa).to_vec();
                v.sort_unstable();
                v
            }
            None => Vec::new(),
        };
        let expected = scan_occurrences(text, pattern);
        assert_eq!(found, expected, "case {}", i);
        if expected.is_empty() {
            misses += 1;
        } else {
            matches += 1;
        }
    }
    assert!(matches > 0 && misses > 0, "suite must cover both outcomes");
    pass(
        5,
        &format!(
            "find_range == scan oracle on 1000 cases ({} matching, {} absent)",
            matches, misses
        ),
    );
}

#[test]
fn c06_cross_structure_equivalence() {
    let cases = search_cases(200, 0x72EE);
    let cfg = SearchConfig::default();
    for (i, (text, pattern)) in cases.iter().enumerate() {
        let sa = build_dc3(text).unwrap();
        let tree = build_tree(text).unwrap();
        let mut from_sa: Vec<u32> = match find_range(&sa, text, pattern, cfg).unwrap() {
            Some(r) => r.positions(&sa).to_vec(),
            None => Vec::new(),
        };
        from_sa.sort_unstable();
        let from_tree = tree_find(&tree, text, pattern).unwrap();
        assert_eq!(from_tree, from_sa, "case {}", i);
    }
    pass(6, "tree_find == suffix-array occurrence set on 200 cases");
}

#[test]
fn c07_tree_structural_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x57AB);
    for trial in 0..100 {
        let n = rng.gen_range(1..=2000);
        let text = random_seq(&mut rng, n);
        let tree = build_tree(&text).unwrap();
        let stats = tree_stats(&tree);
        assert_eq!(stats.leaf_count, n + 1, "leaf census, trial {}", trial);
        for (v, node) in tree.nodes().iter().enumerate() {
            let children = node.children.iter().filter(|&&c| c != NO_NODE).count();
            if node.is_leaf() {
                continue;
            }
            if v != tree.root() {
                assert!(
                    (2..=5).contains(&children),
                    "branching {} at node {}, trial {}",
                    children,
                    v,
                    trial
                );
            }
            // children are distinct by first symbol: each child's edge
            // starts with the symbol of its table slot
            for (slot, &ch) in node.children.iter().enumerate() {
                if ch == NO_NODE {
                    continue;
                }
                let start = tree.nodes()[ch as usize].edge_start as usize;
                let first = tree.label_symbol(&text, start);
                assert_eq!(first as usize, slot, "slot symbol at node {}", v);
            }
        }
    }
    pass(7, "leaf census, branching 2..=5, distinct first symbols on 100 texts");
}

#[test]
fn c08_batch_determinism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xDE7);
    let text = random_seq(&mut rng, 100_000);
    let queries = gen_queries(
        &text,
        &QueryGenSpec {
            count: 65536,
            length: 64,
            mix_ratio: 0.5,
            mutation_rate: 0.02,
            seed: 88,
        },
    )
    .unwrap();
    let index = Index::build(&text, Backend::SuffixArray).unwrap();

    let mut baseline: Option<Vec<i64>> = None;
    let mut runs = 0;
    for workers in [1usize, 2, 4, 8] {
        for tile_len in [1usize, 16, 64, 1024] {
            let cfg = MatcherConfig {
                workers,
                tile_len,
                backend: Backend::SuffixArray,
            };
            let res = match_batch(&index, &text, &queries, &cfg).unwrap();
            match &baseline {
                Some(flat) => assert_eq!(
                    flat,
                    res.flat(),
                    "diff at workers {} tile {}",
                    workers,
                    tile_len
                ),
                None => baseline = Some(res.flat().to_vec()),
            }
            runs += 1;
        }
    }
    pass(
        8,
        &format!(
            "flat arrays bit-identical over {} (workers x tile_len) runs of 65536 queries",
            runs
        ),
    );
}

#[test]
fn c09_space_comparison() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5FACE);
    let text = random_seq(&mut rng, 1_000_000);
    let sa = build_dc3(&text).unwrap();
    let tree = build_tree(&text).unwrap();
    let sa_bytes = sa.index_bytes();
    let tree_bytes = tree_stats(&tree).bytes;
    let ratio = sa_bytes as f64 / tree_bytes as f64;
    assert!(
        ratio < 0.5,
        "sa/tree byte ratio {:.4} not below 0.5 ({} vs {})",
        ratio,
        sa_bytes,
        tree_bytes
    );
    pass(
        9,
        &format!(
            "10^6-symbol reference: sa {} bytes vs tree {} bytes, ratio {:.4}",
            sa_bytes, tree_bytes, ratio
        ),
    );
}

#[test]
fn c10_iteration_bound() {
    let cases = search_cases(1000, 0x5EA2C4);
    let cfg = SearchConfig::default();
    let mut worst = 0usize;
    for (i, (text, pattern)) in cases.iter().enumerate() {
        let sa = build_dc3(text).unwrap();
        let bound = ((text.len() + 2) as f64).log2().ceil() as usize;
        let (_, lb_pivots) = find_lb_instrumented(&sa, text, pattern, cfg);
        let (_, rb_pivots) = find_rb_instrumented(&sa, text, pattern, cfg);
        assert!(
            lb_pivots <= bound && rb_pivots <= bound,
            "case {}: pivots {}/{} exceed bound {}",
            i,
            lb_pivots,
            rb_pivots,
            bound
        );
        worst = worst.max(lb_pivots.max(rb_pivots));
    }
    pass(
        10,
        &format!("pivot count <= ceil(log2(n+2)) on all 1000 cases (worst {})", worst),
    );
}

/// Reported scaling measurements. The thresholds depend on the host's
/// core count and memory, so they are printed and compared but never
/// fail the suite.
#[test]
fn c11_soft_scaling_reported() {
    let suite_start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5CA1E);
    let text_2m = random_seq(&mut rng, 2_000_000);
    let text_1m = EncodedSequence::from_codes(text_2m.codes()[..1_000_000].to_vec()).unwrap();

    // near-linear construction: time(2e6) vs time(1e6), min of 3 runs to
    // cut scheduler and allocator noise
    let time_build = |text: &EncodedSequence| -> f64 {
        (0..3)
            .map(|_| {
                let start = Instant::now();
                std::hint::black_box(build_dc3(text).unwrap());
                start.elapsed().as_secs_f64()
            })
            .fold(f64::INFINITY, f64::min)
    };
    let build_1m = time_build(&text_1m);
    let build_2m = time_build(&text_2m);
    let sa_1m = build_dc3(&text_1m).unwrap();
    let build_ratio = build_2m / build_1m;
    let build_ok = build_ratio <= 2.6;
    println!(
        "{} — criterion 11a: dc3 build {:.3}s at 10^6 vs {:.3}s at 2*10^6, ratio {:.2} (threshold 2.6)",
        if build_ok { "SOFT-PASS" } else { "SOFT-MISS" },
        build_1m,
        build_2m,
        build_ratio
    );

    // kernel scaling: 65536 queries of length 1024 on the 10^6 reference
    let queries = gen_queries(
        &text_1m,
        &QueryGenSpec {
            count: 65536,
            length: 1024,
            mix_ratio: 0.5,
            mutation_rate: 0.0,
            seed: 11,
        },
    )
    .unwrap();
    let index = Index::Array(sa_1m);
    let kernel = |workers: usize| -> (f64, Vec<i64>) {
        let cfg = MatcherConfig {
            workers,
            tile_len: 64,
            backend: Backend::SuffixArray,
        };
        let mut best = f64::INFINITY;
        let mut flat = Vec::new();
        for _ in 0..3 {
            let start = Instant::now();
            let res = match_batch(&index, &text_1m, &queries, &cfg).unwrap();
            best = best.min(start.elapsed().as_secs_f64());
            flat = res.flat().to_vec();
        }
        (best, flat)
    };
    let (kernel_1w, flat_1w) = kernel(1);
    let (kernel_4w, flat_4w) = kernel(4);
    assert_eq!(flat_1w, flat_4w, "worker count changed results");
    let kernel_ratio = kernel_4w / kernel_1w;
    let kernel_ok = kernel_ratio <= 0.6;
    let cores = std::thread::available_parallelism().map_or(0, |n| n.get());
    println!(
        "{} — criterion 11b: kernel {:.3}s at 1 worker vs {:.3}s at 4 workers, ratio {:.2} (threshold 0.6, {} cores available)",
        if kernel_ok { "SOFT-PASS" } else { "SOFT-MISS" },
        kernel_1w,
        kernel_4w,
        kernel_ratio,
        cores
    );

    let total = suite_start.elapsed();
    assert!(
        total.as_secs() < 600,
        "soft bench took {:?}, expected < 10 minutes",
        total
    );
    println!(
        "PASS — criterion 11: soft scaling measured and reported in {:?} (not hard-failed)",
        total
    );
}
