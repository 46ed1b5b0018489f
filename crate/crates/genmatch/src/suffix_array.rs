//! Suffix array construction.
//!
//! [`build_dc3`] is the production path: the linear-time DC3 (skew)
//! algorithm. It radix-sorts the triple-blocks of the sample suffixes
//! (positions not divisible by 3), recurses on the rank string when the
//! triple names are not unique, sorts the remaining suffixes by
//! (symbol, successor rank) pairs, and merges the two orders with the
//! mod-1/mod-2 case split. [`build_naive`] is the comparison-sort oracle
//! used to cross-check it. [`build_dc3_trace`] exposes the intermediate
//! sample ranks and the final 1-based rank table for inspection.
//!
//! Positions are 32-bit; texts at or beyond 2^32 - 3 symbols are rejected
//! so the on-disk index format stays fixed-width.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::seq::EncodedSequence;

/// Largest supported text length; three padding slots must still fit in u32.
pub const MAX_TEXT_LEN: u64 = (1 << 32) - 3;

/// Lexicographically sorted suffix start positions of one text.
///
/// `positions()` is a permutation of `0..n` with
/// `suffix(positions()[i]) < suffix(positions()[i+1])` for every `i`.
/// Immutable once built; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixArray {
    sa: Vec<u32>,
}

impl SuffixArray {
    /// Wraps raw positions without validation. Intended for index
    /// deserialization and for feeding [`verify`] known-bad inputs.
    pub fn from_positions(sa: Vec<u32>) -> Self {
        SuffixArray { sa }
    }

    #[inline]
    pub fn positions(&self) -> &[u32] {
        &self.sa
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// In-memory size of the position array, for the space comparison
    /// against the suffix tree.
    #[inline]
    pub fn index_bytes(&self) -> usize {
        self.sa.len() * std::mem::size_of::<u32>()
    }
}

/// Inverse permutation of a [`SuffixArray`]: `rank()[p]` is the position
/// of suffix `p` in sorted order (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankArray {
    rank: Vec<u32>,
}

impl RankArray {
    #[inline]
    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rank.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// Sorted-order position of the suffix starting at `pos`.
    #[inline]
    pub fn rank_of(&self, pos: usize) -> u32 {
        self.rank[pos]
    }
}

/// Computes the inverse rank array of a suffix array.
pub fn rank_array(sa: &SuffixArray) -> RankArray {
    let mut rank = vec![0u32; sa.len()];
    for (i, &p) in sa.positions().iter().enumerate() {
        rank[p as usize] = i as u32;
    }
    RankArray { rank }
}

/// Intermediate state of a DC3 run, for inspecting the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dc3Trace {
    /// Sample positions `C`: positions congruent to 1 mod 3, then 2 mod 3.
    pub sample_positions: Vec<u32>,
    /// 1-based rank of each sample suffix among the samples after step 1.
    pub sample_ranks: BTreeMap<u32, u32>,
    /// Non-sample (mod-0) suffix positions in sorted order after step 2.
    pub nonsample_order: Vec<u32>,
    /// 1-based rank of every suffix in the final order.
    pub full_rank_1based: Vec<u32>,
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// First index whose entry is out of range or duplicated.
    NotPermutation { index: usize },
    /// First index `i` where `suffix(sa[i]) < suffix(sa[i+1])` fails.
    OutOfOrder { index: usize },
}

impl Verdict {
    #[inline]
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

/// Builds the suffix array with the DC3 (skew) algorithm.
pub fn build_dc3(seq: &EncodedSequence) -> Result<SuffixArray> {
    let padded = padded_text(seq)?;
    let n = seq.len();
    let sa = skew(&padded, n, 4, None);
    Ok(SuffixArray { sa })
}

/// Builds the suffix array by comparison-sorting all suffixes directly.
///
/// Same contract as [`build_dc3`]; used as the independent oracle.
pub fn build_naive(seq: &EncodedSequence) -> Result<SuffixArray> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if n as u64 >= MAX_TEXT_LEN {
        return Err(Error::TextTooLong { len: n });
    }
    let codes = seq.codes();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by(|&a, &b| codes[a as usize..].cmp(&codes[b as usize..]));
    Ok(SuffixArray { sa })
}

/// Runs DC3 and captures the intermediate sample ranks, the sorted
/// non-sample order, and the final 1-based ranks.
pub fn build_dc3_trace(seq: &EncodedSequence) -> Result<Dc3Trace> {
    let padded = padded_text(seq)?;
    let n = seq.len();

    let mut capture = TraceCapture::default();
    let sa = if n >= 3 {
        skew(&padded, n, 4, Some(&mut capture))
    } else {
        // Degenerate texts skip the sampled construction; fill the trace
        // from the definitions directly.
        if n == 2 {
            capture.sample_ranks.push((1, 1));
        }
        capture.nonsample_order.push(0);
        skew(&padded, n, 4, None)
    };

    let sample_positions: Vec<u32> = (1..n as u32)
        .step_by(3)
        .chain((2..n as u32).step_by(3))
        .collect();
    let mut full_rank_1based = vec![0u32; n];
    for (i, &p) in sa.iter().enumerate() {
        full_rank_1based[p as usize] = i as u32 + 1;
    }
    Ok(Dc3Trace {
        sample_positions,
        sample_ranks: capture.sample_ranks.into_iter().collect(),
        nonsample_order: capture.nonsample_order,
        full_rank_1based,
    })
}

/// Checks that `sa` is a permutation of `0..n` in strict suffix order.
///
/// Runs in O(n * average-lcp): adjacent suffixes are compared directly
/// with early exit at the first disagreeing symbol.
pub fn verify(sa: &SuffixArray, seq: &EncodedSequence) -> Result<Verdict> {
    let n = seq.len();
    if sa.len() != n {
        return Err(Error::LengthMismatch {
            sa_len: sa.len(),
            text_len: n,
        });
    }
    let mut seen = vec![false; n];
    for (index, &p) in sa.positions().iter().enumerate() {
        let p = p as usize;
        if p >= n || seen[p] {
            return Ok(Verdict::NotPermutation { index });
        }
        seen[p] = true;
    }
    let codes = seq.codes();
    for index in 0..n.saturating_sub(1) {
        let a = sa.positions()[index] as usize;
        let b = sa.positions()[index + 1] as usize;
        if codes[a..].cmp(&codes[b..]) != Ordering::Less {
            return Ok(Verdict::OutOfOrder { index });
        }
    }
    Ok(Verdict::Ok)
}

/// Copies the codes into a u32 buffer with three trailing zero pads so
/// every triple-block read stays in bounds.
fn padded_text(seq: &EncodedSequence) -> Result<Vec<u32>> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if n as u64 >= MAX_TEXT_LEN {
        return Err(Error::TextTooLong { len: n });
    }
    let mut s = Vec::with_capacity(n + 3);
    s.extend(seq.codes().iter().map(|&c| u32::from(c)));
    s.extend([0, 0, 0]);
    Ok(s)
}

#[derive(Debug, Default)]
struct TraceCapture {
    sample_ranks: Vec<(u32, u32)>,
    nonsample_order: Vec<u32>,
}

/// Stable counting sort of `src` by `keys[item]`, written to `dst`.
/// Key values must lie in `0..=k`.
fn radix_pass(src: &[u32], dst: &mut [u32], keys: &[u32], k: usize) {
    let mut count = vec![0u32; k + 1];
    for &x in src {
        count[keys[x as usize] as usize] += 1;
    }
    let mut sum = 0u32;
    for c in count.iter_mut() {
        let t = *c;
        *c = sum;
        sum += t;
    }
    for &x in src {
        let key = keys[x as usize] as usize;
        dst[count[key] as usize] = x;
        count[key] += 1;
    }
}

/// Core skew recursion over `s[0..n]` with symbols in `1..=k` and
/// `s[n..n+3] == 0`. Returns the suffix array of `s[0..n]`.
///
/// `trace` is only passed at the top level; recursive calls never record.
fn skew(s: &[u32], n: usize, k: usize, mut trace: Option<&mut TraceCapture>) -> Vec<u32> {
    debug_assert!(s.len() >= n + 3);
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => {
            // suffix(1) is a prefix of suffix(0) when the symbols tie, so
            // it sorts first unless s[0] < s[1].
            return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] };
        }
        _ => {}
    }

    #[allow(clippy::manual_div_ceil)]
    let n0 = (n + 2) / 3;
    let n1 = (n + 1) / 3;
    let n2 = n / 3;
    let n02 = n0 + n2;
    // When n % 3 == 1 a padded mod-1 sample at position n is added so the
    // mod-0 sort below can look up the rank of every successor.
    let dummies = n0 - n1;

    // step 1: radix sort the sample triples
    let mut s12: Vec<u32> = (0..(n + dummies) as u32).filter(|i| i % 3 != 0).collect();
    debug_assert_eq!(s12.len(), n02);
    let mut sa12 = vec![0u32; n02];
    radix_pass(&s12, &mut sa12, &s[2..], k);
    radix_pass(&sa12, &mut s12, &s[1..], k);
    radix_pass(&s12, &mut sa12, s, k);

    // name the triples; mod-1 blocks fill the left half of the rank
    // string, mod-2 blocks the right half
    let mut r = vec![0u32; n02 + 3];
    let mut name = 0u32;
    let mut prev: Option<(u32, u32, u32)> = None;
    for &p in &sa12 {
        let p = p as usize;
        let triple = (s[p], s[p + 1], s[p + 2]);
        if prev != Some(triple) {
            name += 1;
            prev = Some(triple);
        }
        if p % 3 == 1 {
            r[p / 3] = name;
        } else {
            r[n0 + p / 3] = name;
        }
    }

    // recurse while names are not unique; afterwards r[idx] is the 1-based
    // rank of the sample with recursive index idx, and sa12 holds the
    // recursive indices in sorted order
    if (name as usize) < n02 {
        let sa_r = skew(&r, n02, name as usize, None);
        for (i, &ri) in sa_r.iter().enumerate() {
            r[ri as usize] = i as u32 + 1;
        }
        sa12.copy_from_slice(&sa_r);
    } else {
        for i in 0..n02 {
            sa12[r[i] as usize - 1] = i as u32;
        }
    }

    let pos_of = |ri: u32| -> u32 {
        if (ri as usize) < n0 {
            ri * 3 + 1
        } else {
            (ri - n0 as u32) * 3 + 2
        }
    };

    if let Some(tc) = trace.as_deref_mut() {
        // The padded sample, when present, is the unique smallest and
        // holds rank 1; real sample ranks shift down by one.
        for (idx, &rank) in r.iter().enumerate().take(n02) {
            let pos = pos_of(idx as u32);
            if (pos as usize) < n {
                tc.sample_ranks.push((pos, rank - dummies as u32));
            }
        }
    }

    // step 2: sort mod-0 suffixes by (first symbol, successor rank).
    // Collecting successors in sa12 order pre-sorts by rank; one stable
    // pass on the first symbol finishes the pair sort.
    let mut s0: Vec<u32> = Vec::with_capacity(n0);
    for &ri in &sa12 {
        if (ri as usize) < n0 {
            s0.push(ri * 3);
        }
    }
    let mut sa0 = vec![0u32; n0];
    radix_pass(&s0, &mut sa0, s, k);

    if let Some(tc) = trace {
        tc.nonsample_order = sa0.clone();
    }

    // step 3: merge. Sample vs non-sample comparisons reduce to rank
    // lookups after at most two symbols; the zero padding of r makes
    // out-of-text successors compare smallest.
    let mut sa = vec![0u32; n];
    let mut t = dummies; // skip the padded sample, which sorts first
    let mut p = 0usize;
    let mut out = 0usize;
    while t < n02 && p < n0 {
        let ri = sa12[t] as usize;
        let i = pos_of(sa12[t]) as usize;
        let j = sa0[p] as usize;
        let sample_smaller = if ri < n0 {
            (s[i], r[ri + n0]) <= (s[j], r[j / 3])
        } else {
            (s[i], s[i + 1], r[ri - n0 + 1]) <= (s[j], s[j + 1], r[j / 3 + n0])
        };
        if sample_smaller {
            sa[out] = i as u32;
            t += 1;
        } else {
            sa[out] = j as u32;
            p += 1;
        }
        out += 1;
    }
    while t < n02 {
        sa[out] = pos_of(sa12[t]);
        t += 1;
        out += 1;
    }
    while p < n0 {
        sa[out] = sa0[p];
        p += 1;
        out += 1;
    }
    sa
}
