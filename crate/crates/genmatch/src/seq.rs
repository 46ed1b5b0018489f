//! DNA alphabet and integer-encoded sequences.
//!
//! Every index structure in this crate works on integer codes rather than
//! characters: `a`, `c`, `g`, `t` map to 1, 2, 3, 4, and code 0 is reserved
//! for construction padding and the suffix-tree sentinel. Integer comparison
//! of code arrays therefore agrees with lexicographic comparison of the
//! underlying strings, which is what lets the suffix array, the suffix tree,
//! and the search kernel share one representation.

use crate::error::{Error, Result};

/// The fixed four-symbol DNA alphabet.
pub struct Alphabet;

impl Alphabet {
    /// Symbols in code order: code 1 is `a`, code 4 is `t`.
    pub const SYMBOLS: [char; 4] = ['a', 'c', 'g', 't'];
    /// Reserved code used for padding and the tree sentinel. Never produced
    /// by encoding a real nucleotide.
    pub const PAD: u8 = 0;
    /// Smallest code of a real nucleotide.
    pub const MIN_CODE: u8 = 1;
    /// Largest code of a real nucleotide.
    pub const MAX_CODE: u8 = 4;

    /// Code for a nucleotide character, case-insensitive. `None` for
    /// anything outside the alphabet (including IUPAC ambiguity codes).
    #[inline]
    pub fn code_of(symbol: char) -> Option<u8> {
        match symbol {
            'a' | 'A' => Some(1),
            'c' | 'C' => Some(2),
            'g' | 'G' => Some(3),
            't' | 'T' => Some(4),
            _ => None,
        }
    }

    /// Lowercase character for a code in 1..=4.
    #[inline]
    pub fn symbol_of(code: u8) -> Option<char> {
        match code {
            1 => Some('a'),
            2 => Some('c'),
            3 => Some('g'),
            4 => Some('t'),
            _ => None,
        }
    }
}

/// An integer-encoded DNA sequence. Every element is in 1..=4.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedSequence {
    codes: Vec<u8>,
}

impl EncodedSequence {
    /// Wraps raw codes, validating that every element is in 1..=4.
    /// An empty code array is accepted; searching with one is rejected
    /// later as `EmptyPattern`.
    pub fn from_codes(codes: Vec<u8>) -> Result<Self> {
        for (position, &c) in codes.iter().enumerate() {
            if !(Alphabet::MIN_CODE..=Alphabet::MAX_CODE).contains(&c) {
                return Err(Error::InvalidCode { position });
            }
        }
        Ok(EncodedSequence { codes })
    }

    #[inline]
    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

/// Encodes DNA text, one code per nucleotide, order preserved.
///
/// Input is case-insensitive and stored lowercase on decode. Any character
/// outside `{a,c,g,t}` is rejected with its position; ambiguity codes such
/// as `N` are errors, not silently mapped.
pub fn encode_sequence(text: &str) -> Result<EncodedSequence> {
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut codes = Vec::with_capacity(text.len());
    for (position, symbol) in text.chars().enumerate() {
        match Alphabet::code_of(symbol) {
            Some(c) => codes.push(c),
            None => return Err(Error::InvalidSymbol { position, symbol }),
        }
    }
    Ok(EncodedSequence { codes })
}

/// Decodes raw codes back to lowercase text. Inverse of [`encode_sequence`].
pub fn decode_sequence(codes: &[u8]) -> Result<String> {
    let mut text = String::with_capacity(codes.len());
    for (position, &c) in codes.iter().enumerate() {
        match Alphabet::symbol_of(c) {
            Some(s) => text.push(s),
            None => return Err(Error::InvalidCode { position }),
        }
    }
    Ok(text)
}

/// An ordered batch of queries. Results everywhere are positional: query
/// `q` of the set owns result slots `2q` and `2q+1`.
#[derive(Debug, Clone)]
pub struct QuerySet {
    queries: Vec<EncodedSequence>,
    uniform_length: Option<usize>,
}

impl QuerySet {
    /// Builds a query set, recording the shared length when every query
    /// has the same one.
    pub fn new(queries: Vec<EncodedSequence>) -> Self {
        let uniform_length = match queries.first() {
            Some(first) if queries.iter().all(|q| q.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        QuerySet {
            queries,
            uniform_length,
        }
    }

    #[inline]
    pub fn queries(&self) -> &[EncodedSequence] {
        &self.queries
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.queries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }

    /// Length shared by all queries, if they are uniform.
    #[inline]
    pub fn uniform_length(&self) -> Option<usize> {
        self.uniform_length
    }
}
