//! Permutations of near-maximal weight, counted three ways.
//!
//! Length-`n` permutations with `d` descents and weight `(n-d-1)(d-1)` have
//! minimum decomposition trees whose stem is a path `x_1 < ... < x_{n-d}`
//! with `x_1 = 1`. For a fixed stem the number of such trees is
//! `C(n - 1 - Σ(x_i - i), d)`, and each stem maps to a partition of `n - 1`
//! with exactly that many ways to mark `d` parts. Summing over stems
//! therefore gives `T(n-1, d)`, which is also the brute-force count.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{fold_permutations, EnumConfig, EnumerationError};
use crate::eulerian::QEulerianTable;
use crate::min_decomp::build_min_decomp;
use crate::partitions::{t_nk, Partition};
use crate::perm::{descent_count, Label, Permutation};
use crate::weight::WeightEngine;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("need 1 <= d <= n-1, got n = {n}, d = {d}")]
    Descents { n: usize, d: usize },
    #[error("invalid stem {labels:?} for n = {n}, d = {d}: {reason}")]
    InvalidStem {
        labels: Vec<Label>,
        n: usize,
        d: usize,
        reason: &'static str,
    },
    #[error("stem {0} has no partition image outside the verified region")]
    NoPartition(String),
}

/// Target weight `(n-d-1)(d-1)`, i.e. `maxwt(n, d) - (n-d-1)`.
pub fn target_weight(n: usize, d: usize) -> u64 {
    ((n - d - 1) * (d - 1)) as u64
}

/// `2d >= n-1`: the region where the correspondence is tested.
pub fn in_table_region(n: usize, d: usize) -> bool {
    2 * d + 1 >= n
}

/// `n >= 2d`: the narrower region in which the correspondence was first stated.
pub fn in_theorem_region(n: usize, d: usize) -> bool {
    n >= 2 * d
}

fn check_descents(n: usize, d: usize) -> Result<(), BijectionError> {
    if d == 0 || d >= n {
        return Err(BijectionError::Descents { n, d });
    }
    Ok(())
}

/// An admissible stem for permutations of length `n` with `d` descents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Stem {
    labels: Vec<Label>,
    n: usize,
    d: usize,
}

impl Stem {
    pub fn new(labels: Vec<Label>, n: usize, d: usize) -> Result<Self, BijectionError> {
        match Self::problem(&labels, n, d) {
            None => Ok(Self { labels, n, d }),
            Some(reason) => Err(BijectionError::InvalidStem {
                labels,
                n,
                d,
                reason,
            }),
        }
    }

    fn problem(labels: &[Label], n: usize, d: usize) -> Option<&'static str> {
        if d >= n {
            return Some("needs d < n");
        }
        if labels.len() != n - d {
            return Some("length must be n - d");
        }
        if labels[0] != 1 {
            return Some("must start at 1");
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Some("labels must increase strictly");
        }
        if *labels.last().unwrap() as usize > n {
            return Some("labels must not exceed n");
        }
        if deficit_of(labels) > n - d - 1 {
            return Some("deficit exceeds n - d - 1");
        }
        None
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `Σ (x_i - i)`: weight lost relative to the maximum by the stem alone.
    pub fn deficit(&self) -> usize {
        deficit_of(&self.labels)
    }

    /// Number of minimum decomposition trees with this stem:
    /// the remaining move-ups spread over `d + 1` leaves.
    pub fn count(&self) -> u64 {
        binomial((self.n - 1 - self.deficit()) as u64, self.d as u64)
    }

    /// The matching partition of `n - 1`: parts `x_i - (i - 1)` from the
    /// bottom of the stem up, padded with 1s so the part count is
    /// `n - 1 - deficit`. When `2d = n - 1` and the deficit is `d`, the
    /// padding is one short and the trailing `x_1 = 1` part is dropped.
    pub fn to_partition(&self) -> Result<Partition, BijectionError> {
        let mut parts: Vec<u32> = self
            .labels
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &x)| x - i as u32)
            .collect();
        let target_len = (self.n - 1 - self.deficit()) as isize;
        let mut pad = target_len - parts.len() as isize;
        while pad < 0 {
            if parts.last() != Some(&1) {
                return Err(BijectionError::NoPartition(self.to_string()));
            }
            parts.pop();
            pad += 1;
        }
        parts.extend(std::iter::repeat_n(1, pad as usize));
        Ok(Partition::new(parts).expect("parts are positive"))
    }
}

impl fmt::Display for Stem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.labels.iter().map(u32::to_string).collect();
        f.write_str(&s.join(" "))
    }
}

fn deficit_of(labels: &[Label]) -> usize {
    labels
        .iter()
        .enumerate()
        .map(|(i, &x)| x as usize - (i + 1))
        .sum()
}

/// All admissible stems in lexicographic order.
pub fn enumerate_stems(n: usize, d: usize) -> Vec<Stem> {
    if d >= n {
        return Vec::new();
    }
    let len = n - d;
    let budget = n - d - 1;
    let mut out = Vec::new();
    let mut labels = vec![1 as Label];
    extend_stems(&mut labels, len, n, budget, 0, &mut |labels| {
        out.push(Stem {
            labels: labels.to_vec(),
            n,
            d,
        })
    });
    out
}

fn extend_stems(
    labels: &mut Vec<Label>,
    len: usize,
    n: usize,
    budget: usize,
    deficit: usize,
    emit: &mut impl FnMut(&[Label]),
) {
    if labels.len() == len {
        emit(labels);
        return;
    }
    let i = labels.len() + 1;
    let lo = *labels.last().unwrap() as usize + 1;
    for x in lo..=n {
        // Every later x_j - j is at least this one's, so prune on it alone.
        let step = x - i;
        if deficit + step * (len - i + 1) > budget {
            break;
        }
        labels.push(x as Label);
        extend_stems(labels, len, n, budget, deficit + step, emit);
        labels.pop();
    }
}

pub fn stem_count(s: &Stem) -> u64 {
    s.count()
}

pub fn stem_to_partition(s: &Stem) -> Result<Partition, BijectionError> {
    s.to_partition()
}

/// `#{σ ∈ S_n : des(σ) = d, weight(σ) = w}`.
pub fn count_perms_by_weight(
    n: usize,
    d: usize,
    w: u64,
    table: &QEulerianTable,
) -> Result<u64, BijectionError> {
    Ok(table.count_by_weight(n, d, w)?)
}

/// One row of the verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRecord {
    pub n: usize,
    pub d: usize,
    pub weight: u64,
    /// Brute-force count over `S_n`.
    pub brute: u64,
    /// Sum of stem counts.
    pub stem_total: u64,
    /// `T(n-1, d)`.
    pub t_value: u64,
    pub in_table_region: bool,
    pub in_theorem_region: bool,
    /// `brute == t_value`.
    pub pass: bool,
}

impl BijectionRecord {
    pub fn three_way(&self) -> bool {
        self.brute == self.t_value && self.stem_total == self.t_value
    }
}

pub fn verify_bijection(
    n: usize,
    d: usize,
    table: &QEulerianTable,
) -> Result<BijectionRecord, BijectionError> {
    check_descents(n, d)?;
    let weight = target_weight(n, d);
    let brute = count_perms_by_weight(n, d, weight, table)?;
    let stem_total = enumerate_stems(n, d).iter().map(Stem::count).sum();
    let t_value = t_nk(n as u32 - 1, d as u32);
    Ok(BijectionRecord {
        n,
        d,
        weight,
        brute,
        stem_total,
        t_value,
        in_table_region: in_table_region(n, d),
        in_theorem_region: in_theorem_region(n, d),
        pass: brute == t_value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemRow {
    pub stem: Stem,
    pub count: u64,
    pub partition: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemTotals {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<StemRow>,
    pub total: u64,
    pub t_value: u64,
    /// Every stem has a partition image, the images are distinct, and each
    /// has at least `d` parts with `C(parts, d)` equal to the stem count.
    pub partitions_consistent: bool,
    pub pass: bool,
}

pub fn verify_stem_totals(n: usize, d: usize) -> Result<StemTotals, BijectionError> {
    check_descents(n, d)?;
    let rows: Vec<StemRow> = enumerate_stems(n, d)
        .into_iter()
        .map(|stem| StemRow {
            count: stem.count(),
            partition: stem.to_partition().ok(),
            stem,
        })
        .collect();
    let total = rows.iter().map(|r| r.count).sum();
    let t_value = t_nk(n as u32 - 1, d as u32);
    let mut seen = BTreeSet::new();
    let partitions_consistent = rows.iter().all(|r| match &r.partition {
        Some(p) => {
            p.sum() as usize == n - 1
                && p.len() >= d
                && binomial(p.len() as u64, d as u64) == r.count
                && seen.insert(p.clone())
        }
        None => false,
    });
    Ok(StemTotals {
        n,
        d,
        total,
        t_value,
        pass: total == t_value && partitions_consistent,
        partitions_consistent,
        rows,
    })
}

/// Outcome of checking that near-maximal-weight permutations have path stems.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemPathReport {
    pub n: usize,
    pub checked: u64,
    pub violations: Vec<Permutation>,
}

/// Walks `S_n` and checks every permutation with `d` descents (`2d >= n-1`)
/// and weight `(n-d-1)(d-1)` for a path-shaped stem.
pub fn verify_stem_paths(n: usize, cfg: &EnumConfig) -> Result<StemPathReport, BijectionError> {
    let (checked, violations) = fold_permutations(
        n,
        cfg,
        || (WeightEngine::new(), 0u64, Vec::new()),
        |(engine, checked, bad), word| {
            let d = descent_count(word);
            if d == 0 || !in_table_region(n, d) {
                return;
            }
            if engine.weight(word) != target_weight(n, d) {
                return;
            }
            *checked += 1;
            let p = Permutation::new(word.to_vec()).expect("enumerated words are permutations");
            if !build_min_decomp(&p).stem_is_path() {
                bad.push(p);
            }
        },
        |(e, c1, mut b1), (_, c2, b2)| {
            b1.extend(b2);
            (e, c1 + c2, b1)
        },
    )
    .map(|(_, c, b)| (c, b))?;
    Ok(StemPathReport {
        n,
        checked,
        violations,
    })
}
