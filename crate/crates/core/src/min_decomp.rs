//! Minimum decomposition trees.
//!
//! Same recursive split as the maximum-weight tree, but each segment minimum
//! is joined to the *minimum* of each block, giving a tree rooted at 1 in
//! which every label is smaller than everything below it. Leaves are exactly
//! the descents (plus `n+1`); the remaining nodes form the stem.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{fold_permutations, EnumConfig, EnumerationError};
use crate::perm::{Label, Permutation};
use crate::tree::BlockWalker;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinDecompError {
    #[error("label {0} is not in the tree")]
    UnknownLabel(Label),
    #[error("node {0} is not a leaf")]
    NotALeaf(Label),
    #[error("node {0} hangs directly off the root and cannot move higher")]
    ParentIsRoot(Label),
}

/// Rooted tree on `1..=node_count`, root 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinDecompTree {
    /// `parent[v]` for `v` in `1..=node_count`; `parent[root] == 0`, `parent[0]` unused.
    parent: Vec<Label>,
    /// `children[v]`, sorted ascending.
    children: Vec<Vec<Label>>,
}

pub fn build_min_decomp(p: &Permutation) -> MinDecompTree {
    let n = p.len();
    let ext = p.extend();
    let values = ext.values();
    let walker = BlockWalker::new(&ext);
    let mut parent = vec![0; n + 2];
    walker.walk(n, |min_pos, start, end| {
        let child = values[walker.argmin(start, end)];
        parent[child as usize] = values[min_pos];
    });
    MinDecompTree::from_parents(parent)
}

impl MinDecompTree {
    fn from_parents(parent: Vec<Label>) -> Self {
        let mut children = vec![Vec::new(); parent.len()];
        for (v, &p) in parent.iter().enumerate().skip(1) {
            if p != 0 {
                children[p as usize].push(v as Label);
            }
        }
        // Pushed in label order, so already sorted.
        Self { parent, children }
    }

    pub fn node_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn root(&self) -> Label {
        1
    }

    pub fn parent(&self, v: Label) -> Option<Label> {
        match self.parent[v as usize] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn children(&self, v: Label) -> &[Label] {
        &self.children[v as usize]
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        1..=self.node_count() as Label
    }

    pub fn is_leaf(&self, v: Label) -> bool {
        self.children(v).is_empty()
    }

    /// `(stem, leaves)`, each sorted.
    pub fn classify(&self) -> (Vec<Label>, Vec<Label>) {
        self.labels().partition(|&v| !self.is_leaf(v))
    }

    pub fn leaves(&self) -> Vec<Label> {
        self.labels().filter(|&v| self.is_leaf(v)).collect()
    }

    /// Labels in `v`'s subtree including `v`, sorted.
    pub fn descendants(&self, v: Label) -> Vec<Label> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend_from_slice(self.children(u));
        }
        out.sort_unstable();
        out
    }

    /// Number of leaves under each node (index by label).
    fn leaf_counts(&self) -> Vec<u64> {
        let mut order = Vec::with_capacity(self.node_count());
        let mut stack = vec![self.root()];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend_from_slice(self.children(u));
        }
        let mut counts = vec![0u64; self.parent.len()];
        for &u in order.iter().rev() {
            if self.is_leaf(u) {
                counts[u as usize] = 1;
            }
            if let Some(p) = self.parent(u) {
                counts[p as usize] += counts[u as usize];
            }
        }
        counts
    }

    /// Sum over stem nodes of the leaves beneath them, minus `n`.
    pub fn weight_via_leaves(&self) -> u64 {
        let counts = self.leaf_counts();
        let sum: u64 = self
            .labels()
            .filter(|&v| !self.is_leaf(v))
            .map(|v| counts[v as usize])
            .sum();
        sum - (self.node_count() as u64 - 1)
    }

    /// Every stem node has at most one stem child.
    pub fn stem_is_path(&self) -> bool {
        self.labels().all(|v| {
            self.children(v)
                .iter()
                .filter(|&&c| !self.is_leaf(c))
                .count()
                <= 1
        })
    }

    /// Stem labels from the root downward, if the stem is a path.
    pub fn stem_path(&self) -> Option<Vec<Label>> {
        if !self.stem_is_path() {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = Some(self.root());
        while let Some(v) = cur.filter(|&v| !self.is_leaf(v)) {
            path.push(v);
            cur = self.children(v).iter().copied().find(|&c| !self.is_leaf(c));
        }
        Some(path)
    }

    /// Reattaches `leaf` to its grandparent.
    ///
    /// The leaf-count weight drops by exactly one as long as the old parent
    /// keeps another child; if it does not, the parent turns into a leaf and
    /// the result is only an abstract configuration.
    pub fn move_up(&self, leaf: Label) -> Result<MinDecompTree, MinDecompError> {
        if leaf == 0 || leaf as usize > self.node_count() {
            return Err(MinDecompError::UnknownLabel(leaf));
        }
        if !self.is_leaf(leaf) {
            return Err(MinDecompError::NotALeaf(leaf));
        }
        let parent = self.parent(leaf).ok_or(MinDecompError::NotALeaf(leaf))?;
        let grandparent = self
            .parent(parent)
            .ok_or(MinDecompError::ParentIsRoot(leaf))?;
        Ok(self.reattach(leaf, grandparent))
    }

    /// Moves `v` (with its subtree) under `new_parent`.
    pub(crate) fn reattach(&self, v: Label, new_parent: Label) -> MinDecompTree {
        let mut parent = self.parent.clone();
        parent[v as usize] = new_parent;
        Self::from_parents(parent)
    }

    /// Parent array indexed by label (root maps to 0).
    pub fn canonical_key(&self) -> &[Label] {
        &self.parent[1..]
    }

    /// Lossless 4-bit packing of the parents of labels `2..=n+1`.
    /// Parents never exceed `n`, so this fits whenever `n <= 15`.
    fn packed_key(parents: &[Label]) -> u64 {
        parents[1..]
            .iter()
            .fold(0u64, |acc, &p| (acc << 4) | u64::from(p))
    }

    pub fn to_json(&self) -> MinDecompJson {
        let (_, leaves) = self.classify();
        MinDecompJson {
            nodes: self.labels().collect(),
            edges: self
                .labels()
                .filter_map(|v| self.parent(v).map(|p| [p, v]))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect(),
            root: self.root(),
            leaves,
        }
    }

    /// Directed Graphviz rendering, parent to child. Leaves are boxes and the
    /// root is double-circled.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph min_decomp {\n");
        for v in self.labels() {
            let shape = if v == self.root() {
                "doublecircle"
            } else if self.is_leaf(v) {
                "box"
            } else {
                "ellipse"
            };
            let _ = writeln!(s, "  {v} [shape={shape}];");
        }
        for [p, c] in self.to_json().edges {
            let _ = writeln!(s, "  {p} -> {c};");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDecompJson {
    pub nodes: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
    pub root: Label,
    pub leaves: Vec<Label>,
}

/// Largest `n` [`verify_injectivity`] accepts, regardless of the configured limit.
pub const INJECTIVITY_MAX_N: usize = 15;

/// Whether distinct permutations of length `n` always give distinct trees.
pub fn verify_injectivity(n: usize, cfg: &EnumConfig) -> Result<bool, EnumerationError> {
    cfg.check(n)?;
    if n > INJECTIVITY_MAX_N {
        return Err(EnumerationError::LimitExceeded {
            n,
            limit: INJECTIVITY_MAX_N,
        });
    }
    let mut keys = fold_permutations(
        n,
        cfg,
        Vec::new,
        |keys: &mut Vec<u64>, word| {
            let p = Permutation::new(word.to_vec()).expect("enumerated words are permutations");
            let tree = build_min_decomp(&p);
            keys.push(MinDecompTree::packed_key(tree.canonical_key()));
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    let total = keys.len();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys.len() == total)
}
