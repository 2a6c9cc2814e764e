//! Labeled trees, the block decomposition of a permutation word, and the
//! maximum-weight maxmin tree built from it.
//!
//! The weight functions here are the definitional ones: slow, but they follow
//! the recursive definition directly and serve as the reference the fast
//! algorithms in [`crate::weight`] and [`crate::min_decomp`] are checked against.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{ExtendedPermutation, Label, Permutation};
use crate::rmq::{ArgTree, Extremum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one node")]
    NoNodes,
    #[error("edge ({0}, {1}) uses a label outside 1..={2}")]
    LabelOutOfRange(Label, Label, usize),
    #[error("self loop on {0}")]
    SelfLoop(Label),
    #[error("expected {expected} edges for {nodes} nodes, got {got}")]
    EdgeCount {
        nodes: usize,
        expected: usize,
        got: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
}

/// An undirected tree on labels `1..=node_count`.
///
/// Maxmin-ness is not enforced on construction; use [`MaxminTree::is_maxmin`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaxminTree {
    /// `neighbors[v - 1]`, sorted ascending.
    neighbors: Vec<Vec<Label>>,
}

impl MaxminTree {
    pub fn from_edges(node_count: usize, edges: &[(Label, Label)]) -> Result<Self, TreeError> {
        if node_count == 0 {
            return Err(TreeError::NoNodes);
        }
        if edges.len() != node_count - 1 {
            return Err(TreeError::EdgeCount {
                nodes: node_count,
                expected: node_count - 1,
                got: edges.len(),
            });
        }
        let mut neighbors = vec![Vec::new(); node_count];
        for &(a, b) in edges {
            let in_range = |v: Label| v >= 1 && v as usize <= node_count;
            if !in_range(a) || !in_range(b) {
                return Err(TreeError::LabelOutOfRange(a, b, node_count));
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
            neighbors[a as usize - 1].push(b);
            neighbors[b as usize - 1].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let tree = Self { neighbors };
        // n-1 edges plus connectivity rules out cycles and duplicate edges.
        if tree.reachable_from(1, |_| true).len() != node_count {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    fn from_sorted_adjacency(mut neighbors: Vec<Vec<Label>>) -> Self {
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Self { neighbors }
    }

    pub fn node_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn neighbors(&self, v: Label) -> &[Label] {
        &self.neighbors[v as usize - 1]
    }

    /// Edges `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        let mut out = Vec::with_capacity(self.node_count().saturating_sub(1));
        for (i, list) in self.neighbors.iter().enumerate() {
            let a = i as Label + 1;
            out.extend(list.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn is_local_max(&self, v: Label) -> bool {
        self.neighbors(v).iter().all(|&u| u < v)
    }

    pub fn is_local_min(&self, v: Label) -> bool {
        self.neighbors(v).iter().all(|&u| u > v)
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        1..=self.node_count() as Label
    }

    /// Every node is a strict local maximum or a strict local minimum.
    pub fn is_maxmin(&self) -> bool {
        self.labels()
            .all(|v| self.is_local_max(v) || self.is_local_min(v))
    }

    /// Number of local maxima.
    pub fn descents(&self) -> usize {
        self.labels().filter(|&v| self.is_local_max(v)).count()
    }

    fn reachable_from(&self, start: Label, allowed: impl Fn(Label) -> bool) -> Vec<Label> {
        let mut seen = vec![false; self.node_count() + 1];
        let mut queue = VecDeque::from([start]);
        seen[start as usize] = true;
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for &u in self.neighbors(v) {
                if !seen[u as usize] && allowed(u) {
                    seen[u as usize] = true;
                    queue.push_back(u);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Nodes reachable from `i` along paths that never drop below `i`, sorted.
    pub fn subtree(&self, i: Label) -> Vec<Label> {
        self.reachable_from(i, |u| u >= i)
    }

    /// The recursive weight: remove the minimum, and for every remaining
    /// component add the number of local maxima below the node that was
    /// attached to the minimum, plus the component's own weight.
    pub fn weight_recursive(&self) -> u64 {
        let n = self.node_count();
        let local_max: Vec<bool> = std::iter::once(false)
            .chain(self.labels().map(|v| self.is_local_max(v)))
            .collect();
        let mut removed = vec![false; n + 1];
        let mut pending: Vec<Vec<Label>> = vec![self.labels().collect()];
        let mut total = 0u64;
        let mut queue = VecDeque::new();
        while let Some(component) = pending.pop() {
            let m = *component.iter().min().expect("components are nonempty");
            removed[m as usize] = true;
            for &u in self.neighbors(m) {
                if removed[u as usize] {
                    continue;
                }
                // Flood the piece hanging off `u`; removed nodes cut it off.
                let mut piece = vec![u];
                removed[u as usize] = true;
                queue.push_back(u);
                while let Some(v) = queue.pop_front() {
                    for &w in self.neighbors(v) {
                        if !removed[w as usize] {
                            removed[w as usize] = true;
                            piece.push(w);
                            queue.push_back(w);
                        }
                    }
                }
                for &v in &piece {
                    removed[v as usize] = false;
                }
                total += piece
                    .iter()
                    .filter(|&&v| local_max[v as usize] && v < u)
                    .count() as u64;
                if piece.len() > 1 {
                    pending.push(piece);
                }
            }
        }
        total
    }

    /// Sum, over local minima `v`, of the local maxima inside `subtree(v)`,
    /// minus `node_count - 1`. Agrees with [`Self::weight_recursive`] on
    /// maximum-weight trees.
    pub fn weight_via_descent_sums(&self) -> u64 {
        if self.node_count() == 1 {
            return 0;
        }
        let sum: usize = self
            .labels()
            .filter(|&v| self.is_local_min(v))
            .map(|v| {
                self.subtree(v)
                    .into_iter()
                    .filter(|&u| self.is_local_max(u))
                    .count()
            })
            .sum();
        (sum - (self.node_count() - 1)) as u64
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            nodes: self.labels().collect(),
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Undirected Graphviz rendering with labels as node names.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph maxmin {\n");
        for v in self.labels() {
            let shape = if self.is_local_max(v) {
                "box"
            } else {
                "ellipse"
            };
            let _ = writeln!(s, "  {v} [shape={shape}];");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  {a} -- {b};");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub nodes: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
}

/// One level of the recursive split of a segment of the extended word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Position of the segment minimum.
    pub min_position: usize,
    /// Blocks left of the minimum, in order. Each ends at the maximum of
    /// everything from its start up to the minimum.
    pub left_blocks: Vec<RangeInclusive<usize>>,
    /// Everything right of the minimum, if anything.
    pub right_block: Option<RangeInclusive<usize>>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> impl Iterator<Item = &RangeInclusive<usize>> {
        self.left_blocks.iter().chain(self.right_block.iter())
    }
}

/// Splits one segment (positions within `1..=n+1`) by a linear scan.
pub fn decompose_blocks(
    ext: &ExtendedPermutation,
    segment: RangeInclusive<usize>,
) -> BlockDecomposition {
    let (lo, hi) = (*segment.start(), *segment.end());
    assert!(
        lo >= 1 && lo <= hi && hi <= ext.n() + 1,
        "segment {lo}..={hi} outside 1..={}",
        ext.n() + 1
    );
    let v = ext.values();
    let min_position = (lo..=hi).min_by_key(|&i| v[i]).unwrap();
    let mut left_blocks = Vec::new();
    let mut start = lo;
    while start < min_position {
        let end = (start..min_position).max_by_key(|&i| v[i]).unwrap();
        left_blocks.push(start..=end);
        start = end + 1;
    }
    let right_block = (min_position < hi).then(|| min_position + 1..=hi);
    BlockDecomposition {
        min_position,
        left_blocks,
        right_block,
    }
}

/// Arg-min / arg-max trees over an extended word, walking the full recursive
/// block decomposition in `O(n log n)`.
pub(crate) struct BlockWalker<'a> {
    values: &'a [Label],
    argmin: ArgTree,
    argmax: ArgTree,
}

impl<'a> BlockWalker<'a> {
    pub(crate) fn new(ext: &'a ExtendedPermutation) -> Self {
        let values = ext.values();
        Self {
            values,
            argmin: ArgTree::new(values, Extremum::Min),
            argmax: ArgTree::new(values, Extremum::Max),
        }
    }

    pub(crate) fn argmin(&self, lo: usize, hi: usize) -> usize {
        self.argmin.query(self.values, lo, hi)
    }

    /// Calls `visit(min_position, block_start, block_end)` for every block at
    /// every depth, starting from the segment `1..=n+1`. Uses an explicit
    /// stack, so deep decompositions do not recurse.
    pub(crate) fn walk(&self, n: usize, mut visit: impl FnMut(usize, usize, usize)) {
        let mut stack = vec![(1usize, n + 1)];
        while let Some((lo, hi)) = stack.pop() {
            let p = self.argmin(lo, hi);
            let mut start = lo;
            while start < p {
                let end = self.argmax.query(self.values, start, p - 1);
                visit(p, start, end);
                if end > start {
                    stack.push((start, end));
                }
                start = end + 1;
            }
            if p < hi {
                debug_assert_eq!(
                    self.argmax.query(self.values, p + 1, hi),
                    hi,
                    "block maximum must sit at its right end"
                );
                visit(p, p + 1, hi);
                if hi > p + 1 {
                    stack.push((p + 1, hi));
                }
            }
        }
    }
}

/// The maximum-weight maxmin tree: every segment minimum is joined to the
/// maximum (rightmost element) of each of its blocks.
pub fn build_max_weight_tree(p: &Permutation) -> MaxminTree {
    let ext = p.extend();
    let values = ext.values();
    let walker = BlockWalker::new(&ext);
    let mut adjacency = vec![Vec::new(); p.len() + 1];
    walker.walk(p.len(), |min_pos, _start, end| {
        let (a, b) = (values[min_pos], values[end]);
        adjacency[a as usize - 1].push(b);
        adjacency[b as usize - 1].push(a);
    });
    MaxminTree::from_sorted_adjacency(adjacency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn tree(n: usize, edges: &[(Label, Label)]) -> MaxminTree {
        MaxminTree::from_edges(n, edges).unwrap()
    }

    const EXAMPLE: &str = "1 12 15 9 10 5 7 11 6 4 13 3 8 2 14";

    #[test]
    fn rejects_non_trees() {
        assert_eq!(MaxminTree::from_edges(0, &[]), Err(TreeError::NoNodes));
        assert!(matches!(
            MaxminTree::from_edges(3, &[(1, 2)]),
            Err(TreeError::EdgeCount { .. })
        ));
        assert_eq!(
            MaxminTree::from_edges(4, &[(1, 2), (2, 1), (3, 4)]),
            Err(TreeError::Disconnected)
        );
        assert_eq!(
            MaxminTree::from_edges(2, &[(1, 3)]),
            Err(TreeError::LabelOutOfRange(1, 3, 2))
        );
    }

    #[test]
    fn maxmin_predicate() {
        assert!(tree(2, &[(1, 2)]).is_maxmin());
        assert!(tree(3, &[(1, 3), (3, 2)]).is_maxmin());
        assert!(!tree(3, &[(1, 2), (2, 3)]).is_maxmin());
    }

    #[test]
    fn block_decomposition_of_worked_example() {
        let ext = parse_permutation(EXAMPLE).unwrap().extend();
        let top = decompose_blocks(&ext, 1..=16);
        assert_eq!(top.min_position, 1);
        assert!(top.left_blocks.is_empty());
        assert_eq!(top.right_block, Some(2..=16));

        let inner = decompose_blocks(&ext, 2..=16);
        assert_eq!(ext.at(inner.min_position), 2);
        let rightmost: Vec<Label> = inner.left_blocks.iter().map(|b| ext.at(*b.end())).collect();
        assert_eq!(rightmost, vec![15, 13, 8]);
        assert_eq!(inner.left_blocks, vec![2..=3, 4..=11, 12..=13]);
        assert_eq!(inner.right_block, Some(15..=16));
    }

    #[test]
    fn block_decomposition_small() {
        // 3 2 1 4: the part left of 1 splits into two singletons.
        let ext = parse_permutation("3 2 1").unwrap().extend();
        let d = decompose_blocks(&ext, 1..=4);
        assert_eq!(d.min_position, 3);
        assert_eq!(d.left_blocks, vec![1..=1, 2..=2]);
        assert_eq!(d.right_block, Some(4..=4));
        // The segment "3 2" alone has its minimum last.
        let d = decompose_blocks(&ext, 1..=2);
        assert_eq!(d.min_position, 2);
        assert_eq!(d.left_blocks, vec![1..=1]);
        assert_eq!(d.right_block, None);
    }

    #[test]
    fn builds_small_trees() {
        let t = build_max_weight_tree(&parse_permutation("1").unwrap());
        assert_eq!(t.edges(), vec![(1, 2)]);
        let t = build_max_weight_tree(&parse_permutation("2 1 3").unwrap());
        assert_eq!(t.edges(), vec![(1, 2), (1, 4), (3, 4)]);
        let t = build_max_weight_tree(&parse_permutation("1 3 2").unwrap());
        assert_eq!(t.edges(), vec![(1, 4), (2, 3), (2, 4)]);
    }

    #[test]
    fn descents_of_trees() {
        assert_eq!(tree(2, &[(1, 2)]).descents(), 1);
        let t = build_max_weight_tree(&parse_permutation("2 1 3").unwrap());
        assert_eq!(t.descents(), 2);
        assert!(t.is_local_max(2) && t.is_local_max(4));
        let p = parse_permutation(EXAMPLE).unwrap();
        let t = build_max_weight_tree(&p);
        assert_eq!(p.descents(), 6);
        assert_eq!(t.descents(), 7);
    }

    #[test]
    fn subtrees() {
        let t = build_max_weight_tree(&parse_permutation("2 1 3").unwrap());
        assert_eq!(t.subtree(1), vec![1, 2, 3, 4]);
        assert_eq!(t.subtree(3), vec![3, 4]);
        assert_eq!(t.subtree(4), vec![4]);
    }

    #[test]
    fn weights() {
        assert_eq!(
            MaxminTree::from_edges(1, &[]).unwrap().weight_recursive(),
            0
        );
        let t = build_max_weight_tree(&parse_permutation("1 3 2").unwrap());
        assert_eq!(t.weight_recursive(), 1);
        assert_eq!(t.weight_via_descent_sums(), 1);
        let t = build_max_weight_tree(&parse_permutation("2 1 3").unwrap());
        assert_eq!(t.weight_recursive(), 0);
        assert_eq!(t.weight_via_descent_sums(), 0);
        for n in 1..8 {
            let t = build_max_weight_tree(&Permutation::identity(n));
            assert_eq!(t.weight_recursive(), 0);
            assert_eq!(t.weight_via_descent_sums(), 0);
        }
    }

    #[test]
    fn deep_words_do_not_overflow_the_stack() {
        let t = build_max_weight_tree(&Permutation::identity(200_000));
        assert_eq!(t.node_count(), 200_001);
        assert_eq!(t.descents(), 1);
    }

    #[test]
    fn json_and_dot() {
        let t = build_max_weight_tree(&parse_permutation("1").unwrap());
        assert_eq!(
            serde_json::to_string(&t.to_json()).unwrap(),
            r#"{"nodes":[1,2],"edges":[[1,2]]}"#
        );
        assert!(t.to_dot().contains("1 -- 2;"));
    }
}
