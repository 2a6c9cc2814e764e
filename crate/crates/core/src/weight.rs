//! Permutation weight straight from the word, without building a tree.
//!
//! Every non-descent position `i` owns a contiguous range of the extended
//! word, which is exactly the subtree of `σ_i` in the maximum-weight tree.
//! The weight is the total number of descents inside those ranges, minus `n`.
//!
//! For a non-descent `i` the range is `[max(M, L) + 1, m]` where
//! - `j` is the first position right of `i` holding a smaller value,
//! - `m` is the position of the maximum strictly between `i` and `j`,
//! - `M` is the nearest position left of `m` holding a value above `σ_m`,
//! - `L` is the nearest position left of `i` holding a value below `σ_i`,
//!   or the front sentinel position 0.
//!
//! [`weight_via_ranges`] finds each index by scanning (`O(n^2)` overall);
//! [`WeightEngine`] precomputes them with monotone stacks and a segment tree
//! (`O(n log n)`).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{ExtendedPermutation, Label, Permutation};
use crate::rmq::{self, ArgTree, Extremum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("position {position} is outside 1..={n}")]
    OutOfRange { position: usize, n: usize },
    #[error("position {0} is a descent")]
    IsDescent(usize),
}

/// Inclusive interval of positions in the extended word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubtreeRange {
    pub left: usize,
    pub right: usize,
}

impl SubtreeRange {
    pub fn len(&self) -> usize {
        self.right + 1 - self.left
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, pos: usize) -> bool {
        (self.left..=self.right).contains(&pos)
    }

    /// Labels inside the range, sorted.
    pub fn labels(&self, ext: &ExtendedPermutation) -> Vec<Label> {
        let mut v = ext.values()[self.left..=self.right].to_vec();
        v.sort_unstable();
        v
    }
}

/// Subtree range of the non-descent at position `i`, found by direct scans.
pub fn subtree_range(ext: &ExtendedPermutation, i: usize) -> Result<SubtreeRange, WeightError> {
    let n = ext.n();
    if i == 0 || i > n {
        // n+1 is always a descent; anything else is out of range.
        return Err(if i == n + 1 {
            WeightError::IsDescent(i)
        } else {
            WeightError::OutOfRange { position: i, n }
        });
    }
    if ext.is_descent(i) {
        return Err(WeightError::IsDescent(i));
    }
    let e = ext.values();
    let j = (i + 1..e.len())
        .find(|&k| e[k] < e[i])
        .expect("back sentinel is 0");
    let m = (i + 1..j)
        .max_by_key(|&k| e[k])
        .expect("i is a non-descent");
    let big_m = (0..m)
        .rev()
        .find(|&k| e[k] > e[m])
        .expect("front sentinel is n+2");
    let big_l = (0..i).rev().find(|&k| e[k] < e[i]).unwrap_or(0);
    Ok(SubtreeRange {
        left: big_m.max(big_l) + 1,
        right: m,
    })
}

/// One line of an `--explain` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeContribution {
    /// Non-descent position (1-based).
    pub position: usize,
    pub value: Label,
    pub range: SubtreeRange,
    /// Descents inside the range, counting the appended node `n+1`.
    pub descents: usize,
}

/// Every non-descent's range and descent count, by direct scans.
pub fn range_contributions(p: &Permutation) -> Vec<RangeContribution> {
    let ext = p.extend();
    (1..=p.len())
        .filter(|&i| !ext.is_descent(i))
        .map(|i| {
            let range = subtree_range(&ext, i).expect("non-descent");
            let descents = (range.left..=range.right)
                .filter(|&k| ext.is_descent(k))
                .count();
            RangeContribution {
                position: i,
                value: ext.at(i),
                range,
                descents,
            }
        })
        .collect()
}

/// The quadratic range algorithm.
pub fn weight_via_ranges(p: &Permutation) -> u64 {
    let total: usize = range_contributions(p).iter().map(|c| c.descents).sum();
    (total - p.len()) as u64
}

/// The `O(n log n)` algorithm. Allocates a fresh [`WeightEngine`]; reuse one
/// when computing many weights.
pub fn weight_accelerated(p: &Permutation) -> u64 {
    WeightEngine::default().weight(p.values())
}

/// Reusable buffers for the accelerated weight computation.
#[derive(Debug, Default)]
pub struct WeightEngine {
    ext: Vec<Label>,
    next_smaller: Vec<usize>,
    prev_greater: Vec<Option<usize>>,
    prev_smaller: Vec<Option<usize>>,
    descent_prefix: Vec<u32>,
    stack: Vec<usize>,
    argmax: Option<ArgTree>,
}

impl WeightEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Weight of `values`, which must be a permutation of `1..=len`.
    pub fn weight(&mut self, values: &[Label]) -> u64 {
        let n = values.len();
        self.ext.clear();
        self.ext.push(n as Label + 2);
        self.ext.extend_from_slice(values);
        self.ext.push(n as Label + 1);
        self.ext.push(0);
        let e = &self.ext;

        rmq::next_smaller_right(e, &mut self.next_smaller, &mut self.stack);
        rmq::previous_greater(e, &mut self.prev_greater, &mut self.stack);
        rmq::previous_smaller(e, &mut self.prev_smaller, &mut self.stack);
        match &mut self.argmax {
            Some(t) => t.rebuild(e),
            None => self.argmax = Some(ArgTree::new(e, Extremum::Max)),
        }
        let argmax = self.argmax.as_ref().unwrap();

        // descent_prefix[p] = descents among positions 1..=p
        self.descent_prefix.clear();
        self.descent_prefix.push(0);
        let mut acc = 0;
        for p in 1..=n + 1 {
            acc += u32::from(e[p] > e[p + 1]);
            self.descent_prefix.push(acc);
        }

        let mut total: u64 = 0;
        for i in 1..=n {
            if e[i] > e[i + 1] {
                continue;
            }
            let j = self.next_smaller[i];
            let m = argmax.query(e, i + 1, j - 1);
            let big_m = self.prev_greater[m].expect("front sentinel is n+2");
            let big_l = self.prev_smaller[i].unwrap_or(0);
            let left = big_m.max(big_l) + 1;
            total += u64::from(self.descent_prefix[m] - self.descent_prefix[left - 1]);
        }
        total - n as u64
    }
}
