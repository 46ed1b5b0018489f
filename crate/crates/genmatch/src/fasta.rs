//! FASTA ingestion and emission.
//!
//! References use the first record only; query files read every record,
//! one query per record. Sequence lines are concatenated and encoded
//! case-insensitively. Characters outside the alphabet follow the
//! configured policy: reject with position (default) or drop.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::seq::{Alphabet, EncodedSequence, QuerySet};

/// What to do with non-ACGT sequence characters (for example `N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NonAcgtPolicy {
    /// Fail with `InvalidSymbol` at the offending position.
    #[default]
    Error,
    /// Drop the character.
    Skip,
}

/// One parsed FASTA record.
#[derive(Debug, Clone)]
pub struct FastaRecord {
    /// Header token up to the first whitespace, without the `>`.
    pub id: String,
    pub seq: EncodedSequence,
}

/// Reads the first record of a FASTA file as the reference sequence.
pub fn read_fasta(path: &Path, policy: NonAcgtPolicy) -> Result<FastaRecord> {
    let mut records = parse_fasta(open(path)?, policy, true)?;
    Ok(records.remove(0))
}

/// Reads every record of a FASTA file as one query each.
pub fn read_fasta_queries(path: &Path, policy: NonAcgtPolicy) -> Result<QuerySet> {
    let records = parse_fasta(open(path)?, policy, false)?;
    Ok(QuerySet::new(records.into_iter().map(|r| r.seq).collect()))
}

/// Writes records as FASTA with 60-column sequence lines.
pub fn write_fasta<'a, I>(path: &Path, records: I) -> Result<()>
where
    I: IntoIterator<Item = (&'a str, &'a EncodedSequence)>,
{
    let mut w = BufWriter::new(File::create(path)?);
    for (id, seq) in records {
        writeln!(w, ">{}", id)?;
        for chunk in seq.codes().chunks(60) {
            let line: String = chunk
                .iter()
                .map(|&c| Alphabet::symbol_of(c).expect("codes are validated"))
                .collect();
            writeln!(w, "{}", line)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn open(path: &Path) -> Result<BufReader<File>> {
    match File::open(path) {
        Ok(f) => Ok(BufReader::new(f)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            Err(Error::FileNotFound(path.to_path_buf()))
        }
        Err(e) => Err(Error::Io(e)),
    }
}

fn parse_fasta<R: BufRead>(
    reader: R,
    policy: NonAcgtPolicy,
    first_only: bool,
) -> Result<Vec<FastaRecord>> {
    let mut records: Vec<FastaRecord> = Vec::new();
    let mut current: Option<(String, Vec<u8>, usize)> = None; // id, codes, header line

    for (line_idx, line) in reader.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('>') {
            if let Some(done) = current.take() {
                records.push(finish_record(done)?);
                if first_only {
                    return Ok(records);
                }
            }
            let id = rest.split_whitespace().next().unwrap_or("").to_string();
            current = Some((id, Vec::new(), line_no));
        } else {
            let (_, codes, _) = current.as_mut().ok_or(Error::MalformedFasta {
                line: line_no,
                reason: "sequence data before the first '>' header",
            })?;
            for symbol in line.chars() {
                if symbol.is_whitespace() {
                    continue;
                }
                match Alphabet::code_of(symbol) {
                    Some(c) => codes.push(c),
                    None => match policy {
                        NonAcgtPolicy::Skip => {}
                        NonAcgtPolicy::Error => {
                            return Err(Error::InvalidSymbol {
                                position: codes.len(),
                                symbol,
                            })
                        }
                    },
                }
            }
        }
    }

    match current {
        Some(done) => records.push(finish_record(done)?),
        None => {
            return Err(Error::MalformedFasta {
                line: 1,
                reason: "no records",
            })
        }
    }
    Ok(records)
}

fn finish_record((id, codes, header_line): (String, Vec<u8>, usize)) -> Result<FastaRecord> {
    if codes.is_empty() {
        return Err(Error::MalformedFasta {
            line: header_line,
            reason: "record has no sequence symbols",
        });
    }
    Ok(FastaRecord {
        id,
        seq: EncodedSequence::from_codes(codes).expect("codes come from the alphabet"),
    })
}
