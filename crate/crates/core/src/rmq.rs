//! Index structures over a word of distinct labels: a bottom-up segment tree
//! answering arg-min / arg-max over a closed position interval, and
//! nearest-smaller / nearest-greater scans built with a monotone stack.

use crate::perm::Label;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Segment tree storing the position of the extremal value of each node's span.
#[derive(Debug, Clone)]
pub struct ArgTree {
    kind: Extremum,
    size: usize,
    tree: Vec<u32>,
}

impl ArgTree {
    pub fn new(values: &[Label], kind: Extremum) -> Self {
        let mut t = Self {
            kind,
            size: 0,
            tree: Vec::new(),
        };
        t.rebuild(values);
        t
    }

    /// Rebuilds over `values`, reusing the allocation.
    pub fn rebuild(&mut self, values: &[Label]) {
        let size = values.len().next_power_of_two().max(1);
        self.size = size;
        self.tree.clear();
        self.tree.resize(2 * size, NONE);
        for i in 0..values.len() {
            self.tree[size + i] = i as u32;
        }
        for i in (1..size).rev() {
            self.tree[i] = self.pick(values, self.tree[2 * i], self.tree[2 * i + 1]);
        }
    }

    #[inline]
    fn pick(&self, values: &[Label], a: u32, b: u32) -> u32 {
        if a == NONE {
            return b;
        }
        if b == NONE {
            return a;
        }
        let (va, vb) = (values[a as usize], values[b as usize]);
        let a_wins = match self.kind {
            Extremum::Min => va < vb,
            Extremum::Max => va > vb,
        };
        if a_wins {
            a
        } else {
            b
        }
    }

    /// Position of the extremum in `lo..=hi`. `values` must be the slice
    /// the tree was built over.
    pub fn query(&self, values: &[Label], lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi && hi < values.len());
        let mut best = NONE;
        let mut l = lo + self.size;
        let mut r = hi + self.size + 1;
        while l < r {
            if l & 1 == 1 {
                best = self.pick(values, best, self.tree[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = self.pick(values, best, self.tree[r]);
            }
            l >>= 1;
            r >>= 1;
        }
        best as usize
    }
}

/// For each index, the nearest index to the right holding a smaller value,
/// or `values.len()` if none.
pub fn next_smaller_right(values: &[Label], out: &mut Vec<usize>, stack: &mut Vec<usize>) {
    let n = values.len();
    out.clear();
    out.resize(n, n);
    stack.clear();
    for i in 0..n {
        while let Some(&top) = stack.last() {
            if values[i] < values[top] {
                out[top] = i;
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(i);
    }
}

/// For each index, the nearest index to the left whose value satisfies
/// `dominates(left, here)`, or `None`.
fn previous_by(
    values: &[Label],
    out: &mut Vec<Option<usize>>,
    stack: &mut Vec<usize>,
    dominates: impl Fn(Label, Label) -> bool,
) {
    out.clear();
    stack.clear();
    for i in 0..values.len() {
        while let Some(&top) = stack.last() {
            if dominates(values[top], values[i]) {
                break;
            }
            stack.pop();
        }
        out.push(stack.last().copied());
        stack.push(i);
    }
}

/// Nearest index to the left with a greater value.
pub fn previous_greater(values: &[Label], out: &mut Vec<Option<usize>>, stack: &mut Vec<usize>) {
    previous_by(values, out, stack, |l, here| l > here);
}

/// Nearest index to the left with a smaller value.
pub fn previous_smaller(values: &[Label], out: &mut Vec<Option<usize>>, stack: &mut Vec<usize>) {
    previous_by(values, out, stack, |l, here| l < here);
}
