//! Integer partitions and the triangle `T(n, k)` of partitions of `n` with
//! `k` parts of a second kind, computed as `sum over λ ⊢ n of C(len(λ), k)`.

use std::fmt;
use std::path::Path;

use num_integer::binomial;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// Concatenated digits, e.g. `311111`; parts above 9 are comma separated.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p < 10) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
            f.write_str(&s.join(","))
        }
    }
}

/// Partitions of `n` in decreasing lexicographic order, starting from `[n]`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.clone()?;
        let parts = self.current.as_mut().unwrap();
        // Drop trailing 1s, decrement the last part above 1, refill greedily.
        let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
        parts.truncate(parts.len() - ones);
        match parts.pop() {
            None => self.current = None,
            Some(v) => {
                let cap = v - 1;
                let mut rest = ones as u32 + v;
                while rest > 0 {
                    let take = rest.min(cap);
                    parts.push(take);
                    rest -= take;
                }
            }
        }
        Some(Partition { parts: out })
    }
}

pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// `T(n, k)`; zero when `k > n`.
pub fn t_nk(n: u32, k: u32) -> u64 {
    enumerate_partitions(n)
        .map(|p| part_choices(p.len() as u64, u64::from(k)))
        .sum()
}

fn part_choices(parts: u64, k: u64) -> u64 {
    if k > parts {
        0
    } else {
        binomial(parts, k)
    }
}

/// Per-partition terms `C(len(λ), k)` for every `λ ⊢ n` with at least `k` parts.
pub fn t_nk_contributions(n: u32, k: u32) -> Vec<(Partition, u64)> {
    enumerate_partitions(n)
        .filter(|p| p.len() >= k as usize)
        .map(|p| {
            let c = part_choices(p.len() as u64, u64::from(k));
            (p, c)
        })
        .collect()
}

/// Rows `0..=n_max` of `T(n, k)`, row `n` holding `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTriangle {
    pub rows: Vec<Vec<u64>>,
}

impl PartitionTriangle {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<u64> {
        self.rows.get(n)?.get(k).copied()
    }

    /// Cells that coincide with `W_d(t)` coefficients: `2k >= n`.
    pub fn is_bold(n: usize, k: usize) -> bool {
        k <= n && 2 * k >= n
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

pub fn t_triangle(n_max: usize) -> PartitionTriangle {
    let rows = (0..=n_max as u32)
        .map(|n| {
            let mut row = vec![0u64; n as usize + 1];
            for p in enumerate_partitions(n) {
                for (k, cell) in row.iter_mut().enumerate().take(p.len() + 1) {
                    *cell += part_choices(p.len() as u64, k as u64);
                }
            }
            row
        })
        .collect();
    PartitionTriangle { rows }
}

#[derive(Debug, Error)]
pub enum CrosscheckError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Layout of an external triangle file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleFormat {
    /// Line `i` (1-based) holds row `n = i - 1`, comma separated.
    Csv,
    /// `index value` lines, index counting row-major from `T(0,0)`; `#` comments.
    BFile,
}

impl TriangleFormat {
    /// Anything with a comma, or with single-value lines, is CSV.
    pub fn detect(text: &str) -> Self {
        let data = || {
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
        };
        let has_comma = data().any(|l| l.contains(','));
        let all_pairs = data().all(|l| l.split_whitespace().count() == 2);
        if !has_comma && all_pairs && data().next().is_some() {
            TriangleFormat::BFile
        } else {
            TriangleFormat::Csv
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCheck {
    pub n: usize,
    pub k: usize,
    pub expected: u64,
    pub found: u64,
}

impl CellCheck {
    pub fn matches(&self) -> bool {
        self.expected == self.found
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub cells: Vec<CellCheck>,
}

impl CrosscheckReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CellCheck> {
        self.cells.iter().filter(|c| !c.matches())
    }

    pub fn all_match(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

fn parse_value(tok: &str, line: usize) -> Result<u64, CrosscheckError> {
    tok.trim().parse().map_err(|_| CrosscheckError::Malformed {
        line,
        message: format!("{:?} is not a nonnegative integer", tok.trim()),
    })
}

/// `(n, k, value)` cells from a triangle file's contents.
pub fn parse_triangle(
    text: &str,
    format: TriangleFormat,
) -> Result<Vec<(usize, usize, u64)>, CrosscheckError> {
    let mut cells = Vec::new();
    match format {
        TriangleFormat::Csv => {
            for (idx, raw) in text.lines().enumerate() {
                let line = idx + 1;
                let n = idx;
                if raw.trim().is_empty() {
                    continue;
                }
                let values = raw
                    .split(',')
                    .map(|t| parse_value(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                if values.len() > n + 1 {
                    return Err(CrosscheckError::Malformed {
                        line,
                        message: format!(
                            "row {n} has {} cells, at most {} allowed",
                            values.len(),
                            n + 1
                        ),
                    });
                }
                cells.extend(values.into_iter().enumerate().map(|(k, v)| (n, k, v)));
            }
        }
        TriangleFormat::BFile => {
            for (idx, raw) in text.lines().enumerate() {
                let line = idx + 1;
                let l = raw.trim();
                if l.is_empty() || l.starts_with('#') {
                    continue;
                }
                let toks: Vec<&str> = l.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(CrosscheckError::Malformed {
                        line,
                        message: "expected \"index value\"".to_string(),
                    });
                }
                let index = parse_value(toks[0], line)? as usize;
                let value = parse_value(toks[1], line)?;
                let (n, k) = triangle_cell(index);
                cells.push((n, k, value));
            }
        }
    }
    Ok(cells)
}

/// Row-major index to `(n, k)`.
pub fn triangle_cell(index: usize) -> (usize, usize) {
    let mut n = 0;
    while (n + 1) * (n + 2) / 2 <= index {
        n += 1;
    }
    (n, index - n * (n + 1) / 2)
}

pub fn crosscheck_text(
    text: &str,
    format: TriangleFormat,
) -> Result<CrosscheckReport, CrosscheckError> {
    let cells = parse_triangle(text, format)?;
    let Some(n_max) = cells.iter().map(|c| c.0).max() else {
        return Ok(CrosscheckReport::default());
    };
    let triangle = t_triangle(n_max);
    let cells = cells
        .into_iter()
        .map(|(n, k, found)| CellCheck {
            n,
            k,
            expected: triangle.get(n, k).expect("cell within triangle"),
            found,
        })
        .collect();
    Ok(CrosscheckReport { cells })
}

/// Compares a triangle file against [`t_triangle`]. `format = None` detects it.
pub fn crosscheck_triangle(
    path: &Path,
    format: Option<TriangleFormat>,
) -> Result<CrosscheckReport, CrosscheckError> {
    let text = std::fs::read_to_string(path).map_err(|source| CrosscheckError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let format = format.unwrap_or_else(|| TriangleFormat::detect(&text));
    crosscheck_text(&text, format)
}
