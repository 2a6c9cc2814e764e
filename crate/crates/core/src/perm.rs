//! Permutations of `1..=n`, their descent statistics, and the sentinel
//! extension used by the tree and weight algorithms.
//!
//! Positions are 1-based everywhere in the public API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Label type. Every algorithm in the crate stores labels as `u32`.
pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty permutation")]
    Empty,
    #[error("token {token:?} at position {position} is not a positive integer")]
    NotAnInteger { position: usize, token: String },
    #[error("label {label} at position {position} is outside 1..={n}")]
    OutOfRange {
        position: usize,
        label: i64,
        n: usize,
    },
    #[error("duplicate label {label} at position {position}")]
    Duplicate { position: usize, label: Label },
}

/// A word containing every label `1..=n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Label>", into = "Vec<Label>")]
pub struct Permutation {
    values: Vec<Label>,
}

impl Permutation {
    /// Validates `values` as a permutation of `1..=values.len()`.
    pub fn new(values: Vec<Label>) -> Result<Self, ParseError> {
        if values.is_empty() {
            return Err(ParseError::Empty);
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in values.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(ParseError::OutOfRange {
                    position: idx + 1,
                    label: v as i64,
                    n,
                });
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(ParseError::Duplicate {
                    position: idx + 1,
                    label: v,
                });
            }
        }
        Ok(Self { values })
    }

    /// The identity `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have at least one element");
        Self {
            values: (1..=n as Label).collect(),
        }
    }

    /// The reversal `n n-1 ... 1`.
    pub fn reversal(n: usize) -> Self {
        assert!(n >= 1, "permutations have at least one element");
        Self {
            values: (1..=n as Label).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Label] {
        &self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> Label {
        self.values[i - 1]
    }

    /// 1-based positions `i` with `σ_i > σ_{i+1}`, reading `σ_{n+1} = n+1`.
    /// Position `n` is therefore never a descent.
    pub fn descent_positions(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Number of descents.
    pub fn descents(&self) -> usize {
        descent_count(&self.values)
    }

    /// Labels sitting at descent positions.
    pub fn descent_values(&self) -> Vec<Label> {
        self.descent_positions()
            .into_iter()
            .map(|i| self.at(i))
            .collect()
    }

    pub fn extend(&self) -> ExtendedPermutation {
        ExtendedPermutation::new(self)
    }
}

/// Descent count of a raw word that is known to be a permutation.
pub(crate) fn descent_count(values: &[Label]) -> usize {
    values.windows(2).filter(|w| w[0] > w[1]).count()
}

impl TryFrom<Vec<Label>> for Permutation {
    type Error = ParseError;

    fn try_from(values: Vec<Label>) -> Result<Self, Self::Error> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<Label> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_permutation(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses a one-line permutation such as `"2 1 3"` or `"2,1,3"`.
pub fn parse_permutation(text: &str) -> Result<Permutation, ParseError> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let n = tokens.len();
    let mut values = Vec::with_capacity(n);
    for (idx, tok) in tokens.iter().enumerate() {
        let v: i64 = tok.parse().map_err(|_| ParseError::NotAnInteger {
            position: idx + 1,
            token: tok.to_string(),
        })?;
        if v < 1 || v > n as i64 {
            return Err(ParseError::OutOfRange {
                position: idx + 1,
                label: v,
                n,
            });
        }
        values.push(v as Label);
    }
    Permutation::new(values)
}

/// The working array `n+2, σ_1, ..., σ_n, n+1, 0`.
///
/// Index 0 and index `n+2` hold the sentinels, so positions `1..=n` line up
/// with the permutation's own 1-based positions and position `n+1` is the
/// appended maximum node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedPermutation {
    values: Vec<Label>,
    n: usize,
}

impl ExtendedPermutation {
    pub fn new(p: &Permutation) -> Self {
        let n = p.len();
        let mut values = Vec::with_capacity(n + 3);
        values.push(n as Label + 2);
        values.extend_from_slice(p.values());
        values.push(n as Label + 1);
        values.push(0);
        Self { values, n }
    }

    /// Length of the underlying permutation.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The full array including both sentinels (length `n + 3`).
    pub fn values(&self) -> &[Label] {
        &self.values
    }

    /// Value at extended position `pos` (`0..=n+2`).
    pub fn at(&self, pos: usize) -> Label {
        self.values[pos]
    }

    /// Positions `1..=n+1` of the word, i.e. the permutation with `n+1` appended.
    pub fn word(&self) -> &[Label] {
        &self.values[1..=self.n + 1]
    }

    /// Whether position `pos` (`1..=n+1`) is a descent. The appended node
    /// `n+1` always is, because the back sentinel is 0.
    pub fn is_descent(&self, pos: usize) -> bool {
        debug_assert!((1..=self.n + 1).contains(&pos));
        self.values[pos] > self.values[pos + 1]
    }

    /// Recovers the original permutation.
    pub fn permutation(&self) -> Permutation {
        Permutation {
            values: self.values[1..=self.n].to_vec(),
        }
    }
}

/// Advances `values` to the next permutation in lexicographic order.
/// Returns `false` (leaving the slice sorted ascending) after the last one.
pub fn next_permutation(values: &mut [Label]) -> bool {
    let len = values.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        values.reverse();
        return false;
    }
    let mut j = len - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Iterator over all of `S_n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Vec<Label>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation {
            values: self.current.clone(),
        };
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// All permutations of length `n` (`n >= 1`) in lexicographic order.
pub fn all_permutations(n: usize) -> Permutations {
    assert!(n >= 1, "permutations have at least one element");
    Permutations {
        current: (1..=n as Label).collect(),
        done: false,
    }
}
