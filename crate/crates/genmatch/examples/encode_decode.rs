//! Encoding DNA text to integer codes and back.
//!
//! ```bash
//! cargo run -p genmatch --example encode_decode
//! ```

use genmatch::seq::{decode_sequence, encode_sequence, Alphabet};

fn main() -> genmatch::Result<()> {
    println!("alphabet: {:?} (codes 1..=4, 0 reserved)", Alphabet::SYMBOLS);

    let seq = encode_sequence("acggtacgtac")?;
    println!("encode(\"acggtacgtac\") = {:?}", seq.codes());
    println!("decode back           = {:?}", decode_sequence(seq.codes())?);

    // input is case-insensitive
    let mixed = encode_sequence("AcGt")?;
    println!("encode(\"AcGt\")        = {:?}", mixed.codes());

    // integer order on codes equals lexicographic order on text
    let a = encode_sequence("acg")?;
    let b = encode_sequence("act")?;
    println!(
        "\"acg\" vs \"act\": text {:?}, codes {:?}",
        "acg".cmp("act"),
        a.codes().cmp(b.codes())
    );

    // anything outside {a,c,g,t} is rejected with its position
    match encode_sequence("acgn") {
        Err(e) => println!("encode(\"acgn\") -> error: {}", e),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
