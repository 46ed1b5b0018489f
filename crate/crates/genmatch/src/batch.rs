//! Concurrent multi-query matching against one shared index.
//!
//! A batch of Q queries is partitioned into contiguous blocks, one block
//! per worker. Every worker reads the same immutable index and writes only
//! its own slots of the flat result array (`flat[2q]` = LB, `flat[2q+1]` =
//! RB, both -1 when the query is absent), so no locking is needed and the
//! result is bit-identical for every worker count.
//!
//! Tree-backend results are normalized into suffix-array range form
//! through the rank array, so both backends share one result schema and
//! can be compared row for row.

use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::error::{Error, Result};
use crate::search::{find_range, tree_find, MatchRange, SearchConfig};
use crate::seq::{EncodedSequence, QuerySet};
use crate::suffix_array::{rank_array, build_dc3, RankArray, SuffixArray};
use crate::suffix_tree::{build_tree, tree_stats, FlatSuffixTree};

/// Which index structure answers the queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    SuffixArray,
    SuffixTree,
}

impl Backend {
    /// Short label used in reports and CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Backend::SuffixArray => "sa",
            Backend::SuffixTree => "tree",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sa" => Ok(Backend::SuffixArray),
            "tree" => Ok(Backend::SuffixTree),
            other => Err(format!("unknown backend '{}', expected sa or tree", other)),
        }
    }
}

/// Batch matcher configuration.
#[derive(Debug, Clone, Copy)]
pub struct MatcherConfig {
    /// Concurrent workers; at least 1. Never affects results.
    pub workers: usize,
    /// Comparison tile length, as in [`SearchConfig`].
    pub tile_len: usize,
    pub backend: Backend,
}

impl Default for MatcherConfig {
    fn default() -> Self {
        MatcherConfig {
            workers: 1,
            tile_len: SearchConfig::DEFAULT_TILE_LEN,
            backend: Backend::SuffixArray,
        }
    }
}

/// Index structures the batch matcher can run against.
///
/// The tree variant carries the rank array so tree occurrences can be
/// reported as suffix-array ranges.
pub enum Index {
    Array(SuffixArray),
    Tree {
        tree: FlatSuffixTree,
        rank: RankArray,
    },
}

impl Index {
    /// Builds the index a backend needs over `seq`.
    pub fn build(seq: &EncodedSequence, backend: Backend) -> Result<Index> {
        match backend {
            Backend::SuffixArray => Ok(Index::Array(build_dc3(seq)?)),
            Backend::SuffixTree => {
                let tree = build_tree(seq)?;
                let rank = rank_array(&build_dc3(seq)?);
                Ok(Index::Tree { tree, rank })
            }
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Index::Array(_) => Backend::SuffixArray,
            Index::Tree { .. } => Backend::SuffixTree,
        }
    }

    /// In-memory size of the index structure itself.
    pub fn index_bytes(&self) -> usize {
        match self {
            Index::Array(sa) => sa.index_bytes(),
            Index::Tree { tree, .. } => tree_stats(tree).bytes,
        }
    }
}

/// Flat result array of one batch: slots `2q` and `2q+1` hold the LB/RB
/// pair of query `q`, or (-1, -1) when the query does not occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchResult {
    flat: Vec<i64>,
    query_count: usize,
}

impl BatchResult {
    #[inline]
    pub fn flat(&self) -> &[i64] {
        &self.flat
    }

    #[inline]
    pub fn query_count(&self) -> usize {
        self.query_count
    }

    /// Decoded range of query `q`, `None` for a no-match slot pair.
    pub fn range(&self, q: usize) -> Option<MatchRange> {
        let (lb, rb) = (self.flat[2 * q], self.flat[2 * q + 1]);
        if lb < 0 {
            None
        } else {
            Some(MatchRange {
                lb: lb as usize,
                rb: rb as usize,
            })
        }
    }

    /// Number of queries with at least one occurrence.
    pub fn matched(&self) -> usize {
        (0..self.query_count).filter(|&q| self.flat[2 * q] >= 0).count()
    }
}

/// One row of tabulated results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultRow {
    pub query_id: usize,
    pub lb: i64,
    pub rb: i64,
    pub count: usize,
    /// Occurrence positions in suffix-array order, when requested.
    pub positions: Option<Vec<u32>>,
}

/// Matches every query of the batch against the index.
///
/// Work is split into contiguous blocks of queries, one per worker; all
/// workers are joined before returning. Results are deterministic and
/// identical for every `workers` value.
pub fn match_batch(
    index: &Index,
    text: &EncodedSequence,
    queries: &QuerySet,
    cfg: &MatcherConfig,
) -> Result<BatchResult> {
    if queries.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    for (i, q) in queries.queries().iter().enumerate() {
        if q.is_empty() {
            return Err(Error::EmptyQuery { index: i });
        }
    }

    let q = queries.len();
    let search_cfg = SearchConfig::new(cfg.tile_len);
    let mut flat = vec![0i64; 2 * q];

    let workers = cfg.workers.max(1).min(q);
    if workers == 1 {
        for (qi, slots) in flat.chunks_mut(2).enumerate() {
            let (lb, rb) = query_bounds(index, text, &queries.queries()[qi], search_cfg);
            slots[0] = lb;
            slots[1] = rb;
        }
    } else {
        let block = q.div_ceil(workers);
        thread::scope(|scope| {
            for (w, slots) in flat.chunks_mut(2 * block).enumerate() {
                let start = w * block;
                scope.spawn(move || {
                    for (k, pair) in slots.chunks_mut(2).enumerate() {
                        let (lb, rb) =
                            query_bounds(index, text, &queries.queries()[start + k], search_cfg);
                        pair[0] = lb;
                        pair[1] = rb;
                    }
                });
            }
        });
    }

    Ok(BatchResult {
        flat,
        query_count: q,
    })
}

fn query_bounds(
    index: &Index,
    text: &EncodedSequence,
    query: &EncodedSequence,
    cfg: SearchConfig,
) -> (i64, i64) {
    match index {
        Index::Array(sa) => match find_range(sa, text, query, cfg)
            .expect("queries were validated non-empty")
        {
            Some(r) => (r.lb as i64, r.rb as i64),
            None => (-1, -1),
        },
        Index::Tree { tree, rank } => {
            let occ = tree_find(tree, text, query).expect("queries were validated non-empty");
            if occ.is_empty() {
                (-1, -1)
            } else {
                let mut lb = u32::MAX;
                let mut rb = 0u32;
                for &p in &occ {
                    let r = rank.rank_of(p as usize);
                    lb = lb.min(r);
                    rb = rb.max(r);
                }
                (i64::from(lb), i64::from(rb))
            }
        }
    }
}

/// Tabulates a batch result: count per query and, when requested, the
/// occurrence positions in suffix-array order.
pub fn result_rows(res: &BatchResult, sa: &SuffixArray, with_positions: bool) -> Vec<ResultRow> {
    (0..res.query_count())
        .map(|q| match res.range(q) {
            Some(r) => ResultRow {
                query_id: q,
                lb: r.lb as i64,
                rb: r.rb as i64,
                count: r.count(),
                positions: with_positions.then(|| r.positions(sa).to_vec()),
            },
            None => ResultRow {
                query_id: q,
                lb: -1,
                rb: -1,
                count: 0,
                positions: with_positions.then(Vec::new),
            },
        })
        .collect()
}
