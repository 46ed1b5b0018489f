//! Suffix tree construction, size accounting, and occurrence walks.
//!
//! ```bash
//! cargo run -p genmatch --example suffix_tree_walk
//! ```

use genmatch::search::tree_find;
use genmatch::seq::encode_sequence;
use genmatch::suffix_array::build_dc3;
use genmatch::suffix_tree::{build_tree, collect_occurrences, tree_stats};

fn main() -> genmatch::Result<()> {
    let text = encode_sequence("acggtacgtac")?;
    let tree = build_tree(&text)?;

    let stats = tree_stats(&tree);
    println!("text: acggtacgtac (n = {})", text.len());
    println!(
        "tree: {} nodes = {} leaves + {} internal, {} bytes",
        stats.node_count, stats.leaf_count, stats.internal_count, stats.bytes
    );
    println!(
        "suffix array over the same text: {} bytes",
        build_dc3(&text)?.index_bytes()
    );

    let all = collect_occurrences(&tree, tree.root())?;
    println!("occurrences below the root (all suffixes): {:?}", all);

    for pattern_text in ["a", "ggtac", "cggtacgtac", "tt"] {
        let pattern = encode_sequence(pattern_text)?;
        let occ = tree_find(&tree, &text, &pattern)?;
        println!("P = {:<12} occurrences {:?}", pattern_text, occ);
    }
    Ok(())
}
