//! Flattened suffix tree over an encoded reference.
//!
//! The tree is built with Ukkonen's online algorithm in O(n) and stored as
//! a flat array of fixed-size node records. A sentinel (code 0, smaller
//! than every nucleotide code) is appended internally so each suffix ends
//! at its own leaf; the sentinel-only leaf is excluded from occurrence
//! reporting, which keeps tree results aligned with the suffix array of
//! the unextended text.
//!
//! Each node carries a 5-slot child table indexed by code (slot 0 is the
//! sentinel), so branching is O(1) and the per-node size is fixed, which
//! keeps the space comparison against the suffix array deterministic.

use crate::error::{Error, Result};
use crate::seq::EncodedSequence;
use crate::suffix_array::MAX_TEXT_LEN;

/// Empty slot in a child table.
pub const NO_NODE: u32 = u32::MAX;
/// `leaf_suffix` value of internal nodes.
pub const NO_SUFFIX: u32 = u32::MAX;

const ROOT: usize = 0;
const OPEN_END: u32 = u32::MAX;

/// One node of the flattened tree.
///
/// `edge_start..edge_end` is the label of the incoming edge as a half-open
/// range into the sentinel-extended text (index `n` is the sentinel). The
/// root's range is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeNode {
    pub edge_start: u32,
    pub edge_end: u32,
    /// Child node index per first symbol of the outgoing edge, or [`NO_NODE`].
    pub children: [u32; 5],
    /// Start position of the suffix this leaf spells, or [`NO_SUFFIX`].
    pub leaf_suffix: u32,
}

impl TreeNode {
    #[inline]
    pub fn is_leaf(&self) -> bool {
        self.children.iter().all(|&c| c == NO_NODE)
    }

    #[inline]
    pub fn edge_len(&self) -> usize {
        (self.edge_end - self.edge_start) as usize
    }
}

/// Suffix tree of one reference, flattened into a node array.
#[derive(Debug, Clone)]
pub struct FlatSuffixTree {
    nodes: Vec<TreeNode>,
    root: u32,
    text_len: usize,
}

impl FlatSuffixTree {
    #[inline]
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.root as usize
    }

    /// Length of the reference the tree was built over, without sentinel.
    #[inline]
    pub fn text_len(&self) -> usize {
        self.text_len
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Child of `node` whose edge starts with `code`, if any.
    #[inline]
    pub fn child(&self, node: usize, code: u8) -> Option<usize> {
        match self.nodes[node].children[code as usize] {
            NO_NODE => None,
            c => Some(c as usize),
        }
    }

    /// Suffix start position of a leaf, `None` for internal nodes.
    #[inline]
    pub fn leaf_suffix(&self, node: usize) -> Option<usize> {
        match self.nodes[node].leaf_suffix {
            NO_SUFFIX => None,
            s => Some(s as usize),
        }
    }

    /// True for the leaf that spells only the sentinel.
    #[inline]
    pub fn is_sentinel_leaf(&self, node: usize) -> bool {
        self.nodes[node].leaf_suffix == self.text_len as u32
    }

    /// Symbol at label index `idx` of the sentinel-extended text.
    #[inline]
    pub fn label_symbol(&self, text: &EncodedSequence, idx: usize) -> u8 {
        if idx == self.text_len {
            0
        } else {
            text.codes()[idx]
        }
    }
}

/// Size accounting for the contrastive space evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStats {
    /// All nodes, root included.
    pub node_count: usize,
    pub leaf_count: usize,
    /// Non-leaf nodes; the root counts as internal.
    pub internal_count: usize,
    /// Exact in-memory size of the node array.
    pub bytes: usize,
}

/// Builds the suffix tree of `seq` with the sentinel appended internally.
pub fn build_tree(seq: &EncodedSequence) -> Result<FlatSuffixTree> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if n as u64 >= MAX_TEXT_LEN {
        return Err(Error::TextTooLong { len: n });
    }
    let mut ext = Vec::with_capacity(n + 1);
    ext.extend_from_slice(seq.codes());
    ext.push(0);

    let mut builder = Builder::new(&ext);
    for pos in 0..ext.len() {
        builder.extend(pos);
    }
    Ok(builder.finish())
}

/// All suffix start positions stored in the subtree below `node`, sorted
/// ascending. The sentinel-only leaf is excluded.
pub fn collect_occurrences(tree: &FlatSuffixTree, node: usize) -> Result<Vec<u32>> {
    if node >= tree.node_count() {
        return Err(Error::InvalidNode { node });
    }
    let mut occ = Vec::new();
    let mut stack = vec![node];
    while let Some(v) = stack.pop() {
        let nd = &tree.nodes()[v];
        if nd.is_leaf() {
            if nd.leaf_suffix != tree.text_len as u32 {
                occ.push(nd.leaf_suffix);
            }
        } else {
            for &ch in &nd.children {
                if ch != NO_NODE {
                    stack.push(ch as usize);
                }
            }
        }
    }
    occ.sort_unstable();
    Ok(occ)
}

/// Counts nodes and reports the exact byte size of the node array.
pub fn tree_stats(tree: &FlatSuffixTree) -> TreeStats {
    let node_count = tree.node_count();
    let leaf_count = tree.nodes().iter().filter(|n| n.is_leaf()).count();
    TreeStats {
        node_count,
        leaf_count,
        internal_count: node_count - leaf_count,
        bytes: node_count * std::mem::size_of::<TreeNode>(),
    }
}

/// Ukkonen construction state. Suffix links live in a side table and are
/// dropped once the tree is final.
struct Builder<'a> {
    ext: &'a [u8],
    nodes: Vec<TreeNode>,
    slink: Vec<u32>,
    active_node: usize,
    active_edge: usize,
    active_len: usize,
    remainder: usize,
    need_slink: usize,
}

impl<'a> Builder<'a> {
    fn new(ext: &'a [u8]) -> Self {
        let mut b = Builder {
            ext,
            nodes: Vec::with_capacity(2 * ext.len()),
            slink: Vec::with_capacity(2 * ext.len()),
            active_node: ROOT,
            active_edge: 0,
            active_len: 0,
            remainder: 0,
            need_slink: ROOT,
        };
        b.new_node(0, 0);
        b
    }

    fn new_node(&mut self, start: u32, end: u32) -> usize {
        self.nodes.push(TreeNode {
            edge_start: start,
            edge_end: end,
            children: [NO_NODE; 5],
            leaf_suffix: NO_SUFFIX,
        });
        self.slink.push(ROOT as u32);
        self.nodes.len() - 1
    }

    fn edge_length(&self, node: usize, pos: usize) -> usize {
        let nd = &self.nodes[node];
        let end = if nd.edge_end == OPEN_END {
            pos + 1
        } else {
            nd.edge_end as usize
        };
        end - nd.edge_start as usize
    }

    fn add_slink(&mut self, node: usize) {
        if self.need_slink != ROOT {
            self.slink[self.need_slink] = node as u32;
        }
        self.need_slink = node;
    }

    fn extend(&mut self, pos: usize) {
        self.need_slink = ROOT;
        self.remainder += 1;
        let c = self.ext[pos];
        while self.remainder > 0 {
            if self.active_len == 0 {
                self.active_edge = pos;
            }
            let edge_sym = self.ext[self.active_edge] as usize;
            match self.nodes[self.active_node].children[edge_sym] {
                NO_NODE => {
                    let leaf = self.new_node(pos as u32, OPEN_END);
                    self.nodes[self.active_node].children[edge_sym] = leaf as u32;
                    self.add_slink(self.active_node);
                }
                next => {
                    let next = next as usize;
                    let el = self.edge_length(next, pos);
                    if self.active_len >= el {
                        self.active_edge += el;
                        self.active_len -= el;
                        self.active_node = next;
                        continue;
                    }
                    let next_start = self.nodes[next].edge_start as usize;
                    if self.ext[next_start + self.active_len] == c {
                        self.active_len += 1;
                        self.add_slink(self.active_node);
                        break;
                    }
                    let mid = (next_start + self.active_len) as u32;
                    let split = self.new_node(next_start as u32, mid);
                    self.nodes[self.active_node].children[edge_sym] = split as u32;
                    let leaf = self.new_node(pos as u32, OPEN_END);
                    self.nodes[split].children[c as usize] = leaf as u32;
                    self.nodes[next].edge_start = mid;
                    self.nodes[split].children[self.ext[mid as usize] as usize] = next as u32;
                    self.add_slink(split);
                }
            }
            self.remainder -= 1;
            if self.active_node == ROOT && self.active_len > 0 {
                self.active_len -= 1;
                self.active_edge = pos - self.remainder + 1;
            } else if self.active_node != ROOT {
                self.active_node = self.slink[self.active_node] as usize;
            }
        }
    }

    fn finish(mut self) -> FlatSuffixTree {
        // the sentinel is unique, so every pending suffix was inserted
        debug_assert_eq!(self.remainder, 0);
        let total = self.ext.len();
        for node in &mut self.nodes {
            if node.edge_end == OPEN_END {
                node.edge_end = total as u32;
            }
        }
        // a leaf at string depth d spells the suffix starting at total - d
        let mut stack = vec![(ROOT, 0usize)];
        while let Some((v, depth)) = stack.pop() {
            let mut is_leaf = true;
            for &ch in &self.nodes[v].children {
                if ch != NO_NODE {
                    is_leaf = false;
                    let ch = ch as usize;
                    stack.push((ch, depth + self.nodes[ch].edge_len()));
                }
            }
            if is_leaf && v != ROOT {
                self.nodes[v].leaf_suffix = (total - depth) as u32;
            }
        }
        FlatSuffixTree {
            nodes: self.nodes,
            root: ROOT as u32,
            text_len: total - 1,
        }
    }
}
