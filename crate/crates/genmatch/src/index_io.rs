//! Binary index file format.
//!
//! Layout of a `GSA1` file, all integers little-endian:
//!
//! ```text
//! bytes 0..4    magic "GSA1"
//! bytes 4..12   n, text length, u64
//! bytes 12..12+n        text codes, one byte each (values 1..=4)
//! bytes 12+n..12+n+4n   suffix positions, u32 each
//! ```
//!
//! Reading validates the magic, the exact payload length, the code range,
//! and that the positions form a permutation of `0..n`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::seq::EncodedSequence;
use crate::suffix_array::{SuffixArray, MAX_TEXT_LEN};

pub const INDEX_MAGIC: [u8; 4] = *b"GSA1";

/// Writes the index of `text` to `path` in `GSA1` format.
pub fn write_index(sa: &SuffixArray, text: &EncodedSequence, path: &Path) -> Result<()> {
    if sa.len() != text.len() {
        return Err(Error::LengthMismatch {
            sa_len: sa.len(),
            text_len: text.len(),
        });
    }
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(&INDEX_MAGIC)?;
    w.write_all(&(text.len() as u64).to_le_bytes())?;
    w.write_all(text.codes())?;
    let mut buf = Vec::with_capacity(sa.len() * 4);
    for &p in sa.positions() {
        buf.extend_from_slice(&p.to_le_bytes());
    }
    w.write_all(&buf)?;
    w.flush()?;
    Ok(())
}

/// Reads and validates a `GSA1` index file.
pub fn read_index(path: &Path) -> Result<(SuffixArray, EncodedSequence)> {
    let mut r = match File::open(path) {
        Ok(f) => BufReader::new(f),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::FileNotFound(path.to_path_buf()))
        }
        Err(e) => return Err(Error::Io(e)),
    };

    let mut magic = [0u8; 4];
    read_exact(&mut r, &mut magic)?;
    if magic != INDEX_MAGIC {
        return Err(Error::BadMagic);
    }

    let mut len_bytes = [0u8; 8];
    read_exact(&mut r, &mut len_bytes)?;
    let n64 = u64::from_le_bytes(len_bytes);
    if n64 == 0 {
        return Err(Error::CorruptIndex("empty index"));
    }
    if n64 >= MAX_TEXT_LEN {
        return Err(Error::CorruptIndex("length exceeds the position width"));
    }
    let n = n64 as usize;

    let mut codes = vec![0u8; n];
    read_exact(&mut r, &mut codes)?;
    if codes.iter().any(|&c| !(1..=4).contains(&c)) {
        return Err(Error::CorruptIndex("code out of range"));
    }

    let mut pos_bytes = vec![0u8; n * 4];
    read_exact(&mut r, &mut pos_bytes)?;
    let mut positions = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for chunk in pos_bytes.chunks_exact(4) {
        let p = u32::from_le_bytes(chunk.try_into().expect("chunks of 4"));
        if p as usize >= n || seen[p as usize] {
            return Err(Error::CorruptIndex("positions are not a permutation"));
        }
        seen[p as usize] = true;
        positions.push(p);
    }

    let mut trailing = [0u8; 1];
    if r.read(&mut trailing)? != 0 {
        return Err(Error::CorruptIndex("trailing data"));
    }

    let seq = EncodedSequence::from_codes(codes).expect("codes were validated");
    Ok((SuffixArray::from_positions(positions), seq))
}

fn read_exact<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<()> {
    r.read_exact(buf).map_err(|e| {
        if e.kind() == std::io::ErrorKind::UnexpectedEof {
            Error::Truncated
        } else {
            Error::Io(e)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::encode_sequence;
    use crate::suffix_array::build_dc3;

    fn worked_example() -> (SuffixArray, EncodedSequence) {
        let seq = encode_sequence("acggtacgtac").unwrap();
        let sa = build_dc3(&seq).unwrap();
        (sa, seq)
    }

    #[test]
    fn round_trip_worked_example() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let (sa, seq) = worked_example();
        write_index(&sa, &seq, &path).unwrap();
        let (sa2, seq2) = read_index(&path).unwrap();
        assert_eq!(sa2.positions(), sa.positions());
        assert_eq!(seq2.codes(), seq.codes());
    }

    #[test]
    fn truncated_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let (sa, seq) = worked_example();
        write_index(&sa, &seq, &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() - 5]).unwrap();
        assert!(matches!(read_index(&path), Err(Error::Truncated)));
    }

    #[test]
    fn bad_magic() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let (sa, seq) = worked_example();
        write_index(&sa, &seq, &path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[0] = b'X';
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(read_index(&path), Err(Error::BadMagic)));
    }

    #[test]
    fn duplicate_position_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let seq = encode_sequence("acgt").unwrap();
        let sa = SuffixArray::from_positions(vec![0, 1, 1, 3]);
        write_index(&sa, &seq, &path).unwrap();
        assert!(matches!(
            read_index(&path),
            Err(Error::CorruptIndex("positions are not a permutation"))
        ));
    }

    #[test]
    fn bad_code_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let (sa, seq) = worked_example();
        write_index(&sa, &seq, &path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[12] = 9;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            read_index(&path),
            Err(Error::CorruptIndex("code out of range"))
        ));
    }

    #[test]
    fn trailing_data_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let (sa, seq) = worked_example();
        write_index(&sa, &seq, &path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes.push(0);
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            read_index(&path),
            Err(Error::CorruptIndex("trailing data"))
        ));
    }

    #[test]
    fn length_mismatch_on_write() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ref.gsa1");
        let seq = encode_sequence("acgt").unwrap();
        let sa = SuffixArray::from_positions(vec![0, 1]);
        assert!(matches!(
            write_index(&sa, &seq, &path),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            read_index(Path::new("/no/such/index.gsa1")),
            Err(Error::FileNotFound(_))
        ));
    }
}
