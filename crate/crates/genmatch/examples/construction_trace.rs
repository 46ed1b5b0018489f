//! Inspecting a DC3 run: sample ranks, non-sample order, final ranks.
//!
//! ```bash
//! cargo run -p genmatch --example construction_trace
//! ```

use genmatch::seq::encode_sequence;
use genmatch::suffix_array::build_dc3_trace;

fn main() -> genmatch::Result<()> {
    let text = encode_sequence("acggtacgtac")?;
    let trace = build_dc3_trace(&text)?;

    println!("text: acggtacgtac");
    println!(
        "sample positions (i mod 3 = 1, then i mod 3 = 2): {:?}",
        trace.sample_positions
    );

    println!("sample suffix ranks after step 1:");
    for (&pos, &rank) in &trace.sample_ranks {
        println!("  suffix {:>2} -> rank {}", pos, rank);
    }

    println!(
        "non-sample suffixes sorted in step 2: {:?}",
        trace.nonsample_order
    );

    println!("final 1-based rank per suffix:");
    print!("  i      ");
    for i in 0..trace.full_rank_1based.len() {
        print!("{:>3}", i);
    }
    print!("\n  rank   ");
    for r in &trace.full_rank_1based {
        print!("{:>3}", r);
    }
    println!();
    Ok(())
}
