//! genmatch: exact DNA sequence matching over suffix-array and suffix-tree
//! indexes, with a deterministic batch matcher and a timing harness for
//! contrasting the two structures.
//!
//! # Overview
//!
//! The reference is integer-encoded over `{a,c,g,t}` (code 0 is reserved
//! for padding and the tree sentinel). Two index structures are built over
//! the same encoding:
//!
//! - a suffix array, constructed in linear time by the DC3 / skew
//!   algorithm ([`suffix_array::build_dc3`]), searched by two tiled binary
//!   searches that locate the left and right boundary of the match
//!   interval ([`search::find_range`]);
//! - a flattened suffix tree built with Ukkonen's algorithm
//!   ([`suffix_tree::build_tree`]), searched by an O(m) walk
//!   ([`search::tree_find`]).
//!
//! Both backends answer whole query batches concurrently through
//! [`batch::match_batch`], which writes one `(LB, RB)` pair per query into
//! a flat result array and is bit-deterministic for every worker count.
//! [`bench::run_bench`] wraps a run in the input / kernel / output timing
//! decomposition.
//!
//! # Quick start
//!
//! ```
//! use genmatch::seq::encode_sequence;
//! use genmatch::suffix_array::build_dc3;
//! use genmatch::search::{find_range, SearchConfig};
//!
//! let text = encode_sequence("acggtacgtac")?;
//! let sa = build_dc3(&text)?;
//! let pattern = encode_sequence("tac")?;
//! let hit = find_range(&sa, &text, &pattern, SearchConfig::default())?.unwrap();
//! assert_eq!((hit.lb, hit.rb), (9, 10));
//! assert_eq!(hit.positions(&sa), &[8, 4]);
//! # Ok::<(), genmatch::Error>(())
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`encode_decode`** — alphabet, encoding errors, order preservation
//! - **`build_index`** — DC3 vs naive construction, verification, index files
//! - **`construction_trace`** — sample ranks and rank table of a DC3 run
//! - **`range_search`** — boundary searches and tiled prefix comparison
//! - **`suffix_tree_walk`** — tree construction, stats, occurrence walks
//! - **`batch_workers`** — multi-worker batch matching and determinism
//! - **`generate_queries`** — reproducible query-set generation
//! - **`bench_sweep`** — timing decomposition across query-set sizes
//!
//! ```bash
//! cargo run --release -p genmatch --example build_index
//! cargo run --release -p genmatch --example bench_sweep
//! ```
//!
//! The `genmatch` binary exposes the same functionality as `build`,
//! `search`, `gen-queries`, and `bench` subcommands.

pub mod batch;
pub mod bench;
pub mod error;
pub mod fasta;
pub mod index_io;
pub mod querygen;
pub mod search;
pub mod seq;
pub mod suffix_array;
pub mod suffix_tree;

pub use batch::{match_batch, Backend, BatchResult, Index, MatcherConfig};
pub use error::{Error, Result};
pub use search::{find_range, tree_find, MatchRange, SearchConfig};
pub use seq::{encode_sequence, decode_sequence, EncodedSequence, QuerySet};
pub use suffix_array::{build_dc3, build_naive, rank_array, SuffixArray};
pub use suffix_tree::{build_tree, FlatSuffixTree};
