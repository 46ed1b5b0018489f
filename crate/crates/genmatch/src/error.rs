//! Crate-wide error type.

use std::fmt;
use std::path::PathBuf;

/// Errors produced by encoding, index construction, search, and I/O.
#[derive(Debug)]
pub enum Error {
    /// A character outside the DNA alphabet was found at `position`.
    InvalidSymbol { position: usize, symbol: char },
    /// A code value outside 1..=4 was found at `position`.
    InvalidCode { position: usize },
    /// An operation that requires symbols was given an empty sequence.
    EmptySequence,
    /// The text is too long for 32-bit suffix positions.
    TextTooLong { len: usize },
    /// A suffix array and a text of different lengths were paired.
    LengthMismatch { sa_len: usize, text_len: usize },
    /// A position fell outside the text.
    OutOfBounds { pos: usize, len: usize },
    /// A node index fell outside the tree's node table.
    InvalidNode { node: usize },
    /// A search was attempted with an empty pattern.
    EmptyPattern,
    /// A batch query at `index` was empty.
    EmptyQuery { index: usize },
    /// A batch was submitted with no queries.
    EmptyQuerySet,
    /// The file does not exist.
    FileNotFound(PathBuf),
    /// Any other I/O failure.
    Io(std::io::Error),
    /// The FASTA input is not parseable.
    MalformedFasta { line: usize, reason: &'static str },
    /// The reference is shorter than the requested query length.
    ReferenceTooShort { reference: usize, needed: usize },
    /// The index file does not start with the expected magic bytes.
    BadMagic,
    /// The index file ended before the declared payload.
    Truncated,
    /// The index file payload fails validation.
    CorruptIndex(&'static str),
    /// Two timing reports describe different workloads.
    WorkloadMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSymbol { position, symbol } => {
                write!(f, "invalid symbol '{}' at position {}", symbol, position)
            }
            Error::InvalidCode { position } => {
                write!(f, "invalid code at position {}", position)
            }
            Error::EmptySequence => write!(f, "empty sequence"),
            Error::TextTooLong { len } => {
                write!(f, "text of length {} exceeds the 32-bit position limit", len)
            }
            Error::LengthMismatch { sa_len, text_len } => {
                write!(
                    f,
                    "suffix array length {} does not match text length {}",
                    sa_len, text_len
                )
            }
            Error::OutOfBounds { pos, len } => {
                write!(f, "position {} out of bounds (length {})", pos, len)
            }
            Error::InvalidNode { node } => write!(f, "invalid node index {}", node),
            Error::EmptyPattern => write!(f, "empty pattern"),
            Error::EmptyQuery { index } => write!(f, "query {} is empty", index),
            Error::EmptyQuerySet => write!(f, "query set is empty"),
            Error::FileNotFound(path) => write!(f, "file not found: {}", path.display()),
            Error::Io(e) => write!(f, "i/o error: {}", e),
            Error::MalformedFasta { line, reason } => {
                write!(f, "malformed FASTA at line {}: {}", line, reason)
            }
            Error::ReferenceTooShort { reference, needed } => {
                write!(
                    f,
                    "reference length {} is shorter than query length {}",
                    reference, needed
                )
            }
            Error::BadMagic => write!(f, "bad index magic"),
            Error::Truncated => write!(f, "index file truncated"),
            Error::CorruptIndex(reason) => write!(f, "corrupt index: {}", reason),
            Error::WorkloadMismatch => write!(f, "timing reports describe different workloads"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
