//! Exact-match range search.
//!
//! A pattern that occurs in the reference occupies a contiguous interval
//! of suffix-array entries. [`find_lb`] and [`find_rb`] locate the interval
//! boundaries with two binary searches over the monotone prefix-comparison
//! predicate; [`find_range`] combines them. Comparisons run through
//! [`prefix_compare`], which examines the pattern in fixed-length tiles and
//! stops at the first disagreeing tile — the result is identical for every
//! tile length.
//!
//! Both searches use virtual sentinels `L = -1` and `R = n` (a suffix
//! smaller than everything and one larger than everything), so patterns
//! matching at index 0 or n-1 are found without special cases, and each
//! boundary costs at most ceil(log2(n + 2)) pivot comparisons.
//!
//! [`tree_find`] is the O(m) suffix-tree counterpart returning the same
//! occurrence set.

use crate::error::{Error, Result};
use crate::seq::EncodedSequence;
use crate::suffix_array::SuffixArray;
use crate::suffix_tree::{collect_occurrences, FlatSuffixTree};

/// Order of a pattern relative to one suffix, truncated to pattern length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixOrder {
    /// Pattern sorts before the suffix.
    Less,
    /// Pattern is a prefix of the suffix.
    PrefixEqual,
    /// Pattern sorts after the suffix. A suffix that is a proper prefix of
    /// the pattern compares this way.
    Greater,
}

/// Tuning knob for the comparison kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Symbols compared per tile; must be at least 1. Changes cost, never
    /// results.
    pub tile_len: usize,
}

impl SearchConfig {
    pub const DEFAULT_TILE_LEN: usize = 64;

    pub fn new(tile_len: usize) -> Self {
        SearchConfig {
            tile_len: tile_len.max(1),
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            tile_len: Self::DEFAULT_TILE_LEN,
        }
    }
}

/// Closed interval `[lb, rb]` of suffix-array indices whose suffixes start
/// with one pattern. Occurrence positions are `sa[lb..=rb]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchRange {
    pub lb: usize,
    pub rb: usize,
}

impl MatchRange {
    /// Number of occurrences.
    #[inline]
    pub fn count(&self) -> usize {
        self.rb - self.lb + 1
    }

    /// Occurrence positions in suffix-array order.
    #[inline]
    pub fn positions<'a>(&self, sa: &'a SuffixArray) -> &'a [u32] {
        &sa.positions()[self.lb..=self.rb]
    }
}

/// Compares `pattern` against the suffix starting at `suffix_pos`,
/// truncated to pattern length, in tiles of `cfg.tile_len` symbols.
pub fn prefix_compare(
    pattern: &EncodedSequence,
    text: &EncodedSequence,
    suffix_pos: usize,
    cfg: SearchConfig,
) -> Result<PrefixOrder> {
    if suffix_pos >= text.len() {
        return Err(Error::OutOfBounds {
            pos: suffix_pos,
            len: text.len(),
        });
    }
    Ok(compare_at(pattern.codes(), text.codes(), suffix_pos, cfg.tile_len))
}

/// Tiled comparison core. The pattern and the suffix are consumed one tile
/// at a time; the first unequal tile decides, and a suffix that runs out
/// while tiles are still equal makes the pattern the greater side.
#[inline]
fn compare_at(pattern: &[u8], text: &[u8], suffix_pos: usize, tile_len: usize) -> PrefixOrder {
    let tile = tile_len.max(1);
    let suffix = &text[suffix_pos..];
    let mut off = 0;
    while off < pattern.len() {
        let p_tile = &pattern[off..(off + tile).min(pattern.len())];
        let s_tile = &suffix[off.min(suffix.len())..(off + tile).min(suffix.len())];
        let common = p_tile.len().min(s_tile.len());
        match p_tile[..common].cmp(&s_tile[..common]) {
            std::cmp::Ordering::Less => return PrefixOrder::Less,
            std::cmp::Ordering::Greater => return PrefixOrder::Greater,
            std::cmp::Ordering::Equal => {
                if s_tile.len() < p_tile.len() {
                    return PrefixOrder::Greater;
                }
            }
        }
        off += tile;
    }
    PrefixOrder::PrefixEqual
}

/// Smallest suffix-array index whose suffix starts with `pattern`, or
/// `None` when the pattern does not occur.
pub fn find_lb(
    sa: &SuffixArray,
    text: &EncodedSequence,
    pattern: &EncodedSequence,
    cfg: SearchConfig,
) -> Option<usize> {
    find_lb_instrumented(sa, text, pattern, cfg).0
}

/// [`find_lb`] plus the number of pivot comparisons spent.
pub fn find_lb_instrumented(
    sa: &SuffixArray,
    text: &EncodedSequence,
    pattern: &EncodedSequence,
    cfg: SearchConfig,
) -> (Option<usize>, usize) {
    debug_assert_eq!(sa.len(), text.len());
    let n = sa.len() as i64;
    let (mut lo, mut hi) = (-1i64, n);
    let mut pivots = 0;
    while hi > lo + 1 {
        let mid = (lo + hi) >> 1;
        pivots += 1;
        let pos = sa.positions()[mid as usize] as usize;
        if compare_at(pattern.codes(), text.codes(), pos, cfg.tile_len) == PrefixOrder::Greater {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // hi is the first index where the pattern is <= the truncated suffix
    if hi < n {
        let pos = sa.positions()[hi as usize] as usize;
        if compare_at(pattern.codes(), text.codes(), pos, cfg.tile_len) == PrefixOrder::PrefixEqual
        {
            return (Some(hi as usize), pivots);
        }
    }
    (None, pivots)
}

/// Largest suffix-array index whose suffix starts with `pattern`, or
/// `None` when the pattern does not occur.
pub fn find_rb(
    sa: &SuffixArray,
    text: &EncodedSequence,
    pattern: &EncodedSequence,
    cfg: SearchConfig,
) -> Option<usize> {
    find_rb_instrumented(sa, text, pattern, cfg).0
}

/// [`find_rb`] plus the number of pivot comparisons spent.
pub fn find_rb_instrumented(
    sa: &SuffixArray,
    text: &EncodedSequence,
    pattern: &EncodedSequence,
    cfg: SearchConfig,
) -> (Option<usize>, usize) {
    debug_assert_eq!(sa.len(), text.len());
    let n = sa.len() as i64;
    let (mut lo, mut hi) = (-1i64, n);
    let mut pivots = 0;
    while hi > lo + 1 {
        let mid = (lo + hi) >> 1;
        pivots += 1;
        let pos = sa.positions()[mid as usize] as usize;
        if compare_at(pattern.codes(), text.codes(), pos, cfg.tile_len) == PrefixOrder::Less {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // lo is the last index where the pattern is >= the truncated suffix
    if lo >= 0 {
        let pos = sa.positions()[lo as usize] as usize;
        if compare_at(pattern.codes(), text.codes(), pos, cfg.tile_len) == PrefixOrder::PrefixEqual
        {
            return (Some(lo as usize), pivots);
        }
    }
    (None, pivots)
}

/// Locates the full match interval of `pattern`, or `None` when absent.
pub fn find_range(
    sa: &SuffixArray,
    text: &EncodedSequence,
    pattern: &EncodedSequence,
    cfg: SearchConfig,
) -> Result<Option<MatchRange>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let lb = match find_lb(sa, text, pattern, cfg) {
        Some(lb) => lb,
        None => return Ok(None),
    };
    let rb = find_rb(sa, text, pattern, cfg)
        .expect("right boundary must exist when the left one does");
    debug_assert!(lb <= rb);
    Ok(Some(MatchRange { lb, rb }))
}

/// Suffix-tree search: walks at most `pattern.len()` symbols from the root
/// and collects the occurrences below the match locus. Returns the empty
/// set on mismatch.
pub fn tree_find(
    tree: &FlatSuffixTree,
    text: &EncodedSequence,
    pattern: &EncodedSequence,
) -> Result<Vec<u32>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let codes = pattern.codes();
    let mut node = tree.root();
    let mut matched = 0;
    while matched < codes.len() {
        let child = match tree.child(node, codes[matched]) {
            Some(c) => c,
            None => return Ok(Vec::new()),
        };
        let nd = &tree.nodes()[child];
        let mut li = nd.edge_start as usize;
        while li < nd.edge_end as usize && matched < codes.len() {
            if tree.label_symbol(text, li) != codes[matched] {
                return Ok(Vec::new());
            }
            li += 1;
            matched += 1;
        }
        node = child;
    }
    collect_occurrences(tree, node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::encode_sequence;
    use crate::suffix_array::build_dc3;
    use crate::suffix_tree::build_tree;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn seq(text: &str) -> EncodedSequence {
        encode_sequence(text).unwrap()
    }

    fn random_seq(rng: &mut ChaCha8Rng, len: usize) -> EncodedSequence {
        let codes: Vec<u8> = (0..len).map(|_| rng.gen_range(1..=4)).collect();
        EncodedSequence::from_codes(codes).unwrap()
    }

    /// Independent O(n * m) oracle: every starting position where the text
    /// contains the pattern verbatim.
    fn scan_occurrences(text: &EncodedSequence, pattern: &EncodedSequence) -> Vec<u32> {
        let t = text.codes();
        let p = pattern.codes();
        if p.is_empty() || p.len() > t.len() {
            return Vec::new();
        }
        (0..=t.len() - p.len())
            .filter(|&i| &t[i..i + p.len()] == p)
            .map(|i| i as u32)
            .collect()
    }

    fn range_positions(
        sa: &SuffixArray,
        text: &EncodedSequence,
        pattern: &EncodedSequence,
        cfg: SearchConfig,
    ) -> Vec<u32> {
        match find_range(sa, text, pattern, cfg).unwrap() {
            Some(r) => {
                let mut v = r.positions(sa).to_vec();
                v.sort_unstable();
                v
            }
            None => Vec::new(),
        }
    }

    #[test]
    fn prefix_compare_cases() {
        let s = seq("acggtacgtac");
        let cfg = SearchConfig::default();
        assert_eq!(
            prefix_compare(&seq("tac"), &s, 4, cfg).unwrap(),
            PrefixOrder::PrefixEqual
        );
        assert_eq!(
            prefix_compare(&seq("c"), &s, 10, cfg).unwrap(),
            PrefixOrder::PrefixEqual
        );
        assert_eq!(
            prefix_compare(&seq("ggtac"), &s, 9, cfg).unwrap(),
            PrefixOrder::Greater
        );
    }

    #[test]
    fn prefix_compare_pattern_longer_than_suffix() {
        let s = seq("acggtacgtac");
        let cfg = SearchConfig::default();
        // suffix(9) = "ac" is a proper prefix of the pattern
        assert_eq!(
            prefix_compare(&seq("acg"), &s, 9, cfg).unwrap(),
            PrefixOrder::Greater
        );
        assert_eq!(
            prefix_compare(&seq("aa"), &s, 9, cfg).unwrap(),
            PrefixOrder::Less
        );
    }

    #[test]
    fn prefix_compare_out_of_bounds() {
        let s = seq("ac");
        assert!(matches!(
            prefix_compare(&seq("a"), &s, 2, SearchConfig::default()),
            Err(Error::OutOfBounds { pos: 2, len: 2 })
        ));
    }

    #[test]
    fn prefix_compare_tile_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let tlen = rng.gen_range(1..=80);
            let text = random_seq(&mut rng, tlen);
            let plen = rng.gen_range(1..=12);
            let pattern = random_seq(&mut rng, plen);
            let pos = rng.gen_range(0..text.len());
            let reference = prefix_compare(&pattern, &text, pos, SearchConfig::new(1)).unwrap();
            for tile in [2, 3, 7, 16, 64, 1024] {
                assert_eq!(
                    prefix_compare(&pattern, &text, pos, SearchConfig::new(tile)).unwrap(),
                    reference
                );
            }
        }
    }

    #[test]
    fn boundaries_worked_examples() {
        let s = seq("acggtacgtac");
        let sa = build_dc3(&s).unwrap();
        let cfg = SearchConfig::default();
        assert_eq!(find_lb(&sa, &s, &seq("a"), cfg), Some(0));
        assert_eq!(find_lb(&sa, &s, &seq("tac"), cfg), Some(9));
        assert_eq!(find_lb(&sa, &s, &seq("tt"), cfg), None);
        assert_eq!(find_rb(&sa, &s, &seq("c"), cfg), Some(5));
        assert_eq!(find_rb(&sa, &s, &seq("ggtac"), cfg), Some(6));
        assert_eq!(find_rb(&sa, &s, &seq("gg"), cfg), Some(6));
    }

    #[test]
    fn range_worked_examples() {
        let s = seq("acggtacgtac");
        let sa = build_dc3(&s).unwrap();
        let cfg = SearchConfig::default();

        let r = find_range(&sa, &s, &seq("a"), cfg).unwrap().unwrap();
        assert_eq!((r.lb, r.rb), (0, 2));
        assert_eq!(r.positions(&sa), &[9, 0, 5]);

        let r = find_range(&sa, &s, &seq("c"), cfg).unwrap().unwrap();
        assert_eq!((r.lb, r.rb), (3, 5));

        let r = find_range(&sa, &s, &seq("ggtac"), cfg).unwrap().unwrap();
        assert_eq!((r.lb, r.rb), (6, 6));

        let r = find_range(&sa, &s, &seq("tac"), cfg).unwrap().unwrap();
        assert_eq!((r.lb, r.rb), (9, 10));

        // the whole text is suffix 0; Table I puts it at index 1
        let r = find_range(&sa, &s, &seq("acggtacgtac"), cfg).unwrap().unwrap();
        assert_eq!((r.lb, r.rb), (1, 1));
        assert_eq!(r.positions(&sa), &[0]);

        assert_eq!(find_range(&sa, &s, &seq("tt"), cfg).unwrap(), None);
    }

    #[test]
    fn range_rejects_empty_pattern() {
        let s = seq("ac");
        let sa = build_dc3(&s).unwrap();
        let empty = EncodedSequence::from_codes(vec![]).unwrap();
        assert!(matches!(
            find_range(&sa, &s, &empty, SearchConfig::default()),
            Err(Error::EmptyPattern)
        ));
    }

    #[test]
    fn range_matches_scan_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let cfg = SearchConfig::default();
        for _ in 0..300 {
            let tlen = rng.gen_range(1..=500);
            let text = random_seq(&mut rng, tlen);
            let sa = build_dc3(&text).unwrap();
            let plen = rng.gen_range(1..=8);
            let pattern = if rng.gen_bool(0.5) && text.len() >= plen {
                let at = rng.gen_range(0..=text.len() - plen);
                EncodedSequence::from_codes(text.codes()[at..at + plen].to_vec()).unwrap()
            } else {
                random_seq(&mut rng, plen)
            };
            assert_eq!(
                range_positions(&sa, &text, &pattern, cfg),
                scan_occurrences(&text, &pattern)
            );
        }
    }

    #[test]
    fn boundary_minimality() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let cfg = SearchConfig::default();
        for _ in 0..100 {
            let tlen = rng.gen_range(2..=300);
            let text = random_seq(&mut rng, tlen);
            let sa = build_dc3(&text).unwrap();
            let at = rng.gen_range(0..text.len());
            let plen = rng.gen_range(1..=(text.len() - at).min(6));
            let pattern =
                EncodedSequence::from_codes(text.codes()[at..at + plen].to_vec()).unwrap();
            let r = find_range(&sa, &text, &pattern, cfg).unwrap().unwrap();
            if r.lb > 0 {
                let pos = sa.positions()[r.lb - 1] as usize;
                assert_ne!(
                    prefix_compare(&pattern, &text, pos, cfg).unwrap(),
                    PrefixOrder::PrefixEqual
                );
            }
            if r.rb + 1 < sa.len() {
                let pos = sa.positions()[r.rb + 1] as usize;
                assert_ne!(
                    prefix_compare(&pattern, &text, pos, cfg).unwrap(),
                    PrefixOrder::PrefixEqual
                );
            }
        }
    }

    #[test]
    fn pivot_count_within_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let cfg = SearchConfig::default();
        for _ in 0..100 {
            let tlen = rng.gen_range(1..=2000);
            let text = random_seq(&mut rng, tlen);
            let sa = build_dc3(&text).unwrap();
            let plen = rng.gen_range(1..=6);
            let pattern = random_seq(&mut rng, plen);
            let bound = ((text.len() + 2) as f64).log2().ceil() as usize;
            let (_, lb_pivots) = find_lb_instrumented(&sa, &text, &pattern, cfg);
            let (_, rb_pivots) = find_rb_instrumented(&sa, &text, &pattern, cfg);
            assert!(lb_pivots <= bound, "lb {} > {}", lb_pivots, bound);
            assert!(rb_pivots <= bound, "rb {} > {}", rb_pivots, bound);
        }
    }

    #[test]
    fn tree_find_worked_examples() {
        let s = seq("acggtacgtac");
        let tree = build_tree(&s).unwrap();
        assert_eq!(tree_find(&tree, &s, &seq("a")).unwrap(), vec![0, 5, 9]);
        assert_eq!(tree_find(&tree, &s, &seq("cggtacgtac")).unwrap(), vec![1]);
        assert_eq!(tree_find(&tree, &s, &seq("tt")).unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn tree_find_rejects_empty_pattern() {
        let s = seq("ac");
        let tree = build_tree(&s).unwrap();
        let empty = EncodedSequence::from_codes(vec![]).unwrap();
        assert!(matches!(
            tree_find(&tree, &s, &empty),
            Err(Error::EmptyPattern)
        ));
    }

    #[test]
    fn tree_agrees_with_suffix_array() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let cfg = SearchConfig::default();
        for _ in 0..80 {
            let tlen = rng.gen_range(1..=300);
            let text = random_seq(&mut rng, tlen);
            let sa = build_dc3(&text).unwrap();
            let tree = build_tree(&text).unwrap();
            for _ in 0..4 {
                let plen = rng.gen_range(1..=10);
                let pattern = if rng.gen_bool(0.6) && text.len() >= plen {
                    let at = rng.gen_range(0..=text.len() - plen);
                    EncodedSequence::from_codes(text.codes()[at..at + plen].to_vec()).unwrap()
                } else {
                    random_seq(&mut rng, plen)
                };
                assert_eq!(
                    tree_find(&tree, &text, &pattern).unwrap(),
                    range_positions(&sa, &text, &pattern, cfg)
                );
            }
        }
    }

    #[test]
    fn find_range_tile_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..60 {
            let tlen = rng.gen_range(1..=400);
            let text = random_seq(&mut rng, tlen);
            let sa = build_dc3(&text).unwrap();
            let plen = rng.gen_range(1..=32);
            let pattern = random_seq(&mut rng, plen);
            let reference = find_range(&sa, &text, &pattern, SearchConfig::new(1)).unwrap();
            for tile in [2, 7, 16, 64, 1024] {
                assert_eq!(
                    find_range(&sa, &text, &pattern, SearchConfig::new(tile)).unwrap(),
                    reference
                );
            }
        }
    }
}
