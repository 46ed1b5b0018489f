//! Boundary searches over the suffix array.
//!
//! ```bash
//! cargo run -p genmatch --example range_search
//! ```

use genmatch::search::{find_lb_instrumented, find_range, find_rb_instrumented, SearchConfig};
use genmatch::seq::encode_sequence;
use genmatch::suffix_array::build_dc3;

fn main() -> genmatch::Result<()> {
    let text = encode_sequence("acggtacgtac")?;
    let sa = build_dc3(&text)?;
    let cfg = SearchConfig::default();

    println!("text: acggtacgtac, sa = {:?}\n", sa.positions());
    for pattern_text in ["a", "c", "ggtac", "tac", "acggtacgtac", "tt"] {
        let pattern = encode_sequence(pattern_text)?;
        let (lb, lb_pivots) = find_lb_instrumented(&sa, &text, &pattern, cfg);
        let (rb, rb_pivots) = find_rb_instrumented(&sa, &text, &pattern, cfg);
        match find_range(&sa, &text, &pattern, cfg)? {
            Some(range) => println!(
                "P = {:<12} LB = {:?}, RB = {:?} -> positions {:?} ({} + {} pivots)",
                pattern_text,
                lb.unwrap(),
                rb.unwrap(),
                range.positions(&sa),
                lb_pivots,
                rb_pivots
            ),
            None => println!(
                "P = {:<12} no occurrence ({} + {} pivots)",
                pattern_text, lb_pivots, rb_pivots
            ),
        }
    }

    // the tile length chunks the comparisons without changing results
    let pattern = encode_sequence("gta")?;
    for tile_len in [1, 2, 64] {
        let r = find_range(&sa, &text, &pattern, SearchConfig::new(tile_len))?;
        println!("P = gta, tile_len = {:>2} -> {:?}", tile_len, r);
    }
    Ok(())
}
