//! Suffix array construction, verification, and the index file format.
//!
//! ```bash
//! cargo run -p genmatch --example build_index
//! ```

use genmatch::index_io::{read_index, write_index};
use genmatch::seq::encode_sequence;
use genmatch::suffix_array::{build_dc3, build_naive, rank_array, verify};

fn main() -> genmatch::Result<()> {
    let text = encode_sequence("acggtacgtac")?;

    let sa = build_dc3(&text)?;
    println!("text      : acggtacgtac (n = {})", text.len());
    println!("dc3     sa: {:?}", sa.positions());

    // the comparison-sort oracle agrees
    let naive = build_naive(&text)?;
    println!("naive   sa: {:?}", naive.positions());
    assert_eq!(sa.positions(), naive.positions());

    println!("verify    : {:?}", verify(&sa, &text)?);
    println!("rank array: {:?}", rank_array(&sa).rank());

    // round-trip through the GSA1 index file
    let path = std::env::temp_dir().join("genmatch-example.gsa1");
    write_index(&sa, &text, &path)?;
    let (sa2, text2) = read_index(&path)?;
    assert_eq!(sa2.positions(), sa.positions());
    assert_eq!(text2.codes(), text.codes());
    println!(
        "index file: {} ({} bytes)",
        path.display(),
        std::fs::metadata(&path)?.len()
    );
    std::fs::remove_file(&path)?;
    Ok(())
}
