//! Eulerian and q-Eulerian polynomials by exhaustive enumeration, the
//! stabilization of their top coefficients, and the `W_d(t)` series read
//! off from it.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{fold_permutations, EnumConfig, EnumerationError};
use crate::perm::descent_count;
use crate::poly::BivariatePolynomial;
use crate::weight::WeightEngine;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerianError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("descent count must be at least 1")]
    ZeroDescents,
    #[error("n_max = {n_max} is below the stabilization threshold {threshold}")]
    BelowThreshold { n_max: usize, threshold: usize },
}

/// Largest weight of a length-`n` permutation with `d` descents: `d(n-d-1)`.
pub fn maxwt(n: usize, d: usize) -> u64 {
    assert!(d < n.max(1), "d = {d} descents impossible for n = {n}");
    (d * (n - d - 1)) as u64
}

/// `E_n(x)` as coefficients indexed by descent count.
pub fn eulerian_polynomial(n: usize, cfg: &EnumConfig) -> Result<Vec<u64>, EnumerationError> {
    fold_permutations(
        n,
        cfg,
        || vec![0u64; n],
        |acc, word| acc[descent_count(word)] += 1,
        add_dense,
    )
}

fn add_dense(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `E_n(x, q)`: permutations counted by descents and weight.
pub fn q_eulerian(n: usize, cfg: &EnumConfig) -> Result<BivariatePolynomial, EnumerationError> {
    // Dense (descents, weight) grid; weight never exceeds n^2 / 4.
    let width = n * n / 4 + 1;
    let grid = fold_permutations(
        n,
        cfg,
        || (WeightEngine::new(), vec![0u64; n * width]),
        |(engine, grid), word| {
            let d = descent_count(word);
            let w = engine.weight(word) as usize;
            grid[d * width + w] += 1;
        },
        |(engine, a), (_, b)| (engine, add_dense(a, b)),
    )?
    .1;
    let mut poly = BivariatePolynomial::new();
    for (idx, &c) in grid.iter().enumerate() {
        poly.add_term((idx / width) as u32, (idx % width) as u32, c);
    }
    Ok(poly)
}

/// The coefficient of `x^d q^(maxwt(n,d)-k)` across a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilization {
    pub d: usize,
    pub k: usize,
    /// `(n, coefficient)` for `n` from `d+k+1` upward.
    pub values: Vec<(usize, u64)>,
}

impl Stabilization {
    pub fn is_stable(&self) -> bool {
        self.values.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// The value at the threshold `n = d+k+1`.
    pub fn value(&self) -> u64 {
        self.values[0].1
    }
}

/// Coefficients of a `W_d(t)` prefix, `a_0 = 1` first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WdSeries {
    pub d: usize,
    pub coefficients: Vec<u64>,
}

/// Memoizes `E_n(x, q)` so repeated queries enumerate each `S_n` once.
#[derive(Debug, Default)]
pub struct QEulerianTable {
    cfg: EnumConfig,
    cache: Mutex<BTreeMap<usize, Arc<BivariatePolynomial>>>,
}

impl QEulerianTable {
    pub fn new(cfg: EnumConfig) -> Self {
        Self {
            cfg,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn config(&self) -> &EnumConfig {
        &self.cfg
    }

    pub fn get(&self, n: usize) -> Result<Arc<BivariatePolynomial>, EnumerationError> {
        if let Some(p) = self.cache.lock().unwrap().get(&n) {
            return Ok(Arc::clone(p));
        }
        let poly = Arc::new(q_eulerian(n, &self.cfg)?);
        self.cache.lock().unwrap().insert(n, Arc::clone(&poly));
        Ok(poly)
    }

    /// Coefficient of `x^d q^w` in `E_n`.
    pub fn count_by_weight(&self, n: usize, d: usize, w: u64) -> Result<u64, EnumerationError> {
        Ok(self.get(n)?.coefficient(d as u32, w as u32))
    }

    /// Coefficient of `x^d q^(maxwt(n,d)-k)` in `E_n`, or 0 when the exponent
    /// would be negative.
    pub fn top_coefficient(&self, n: usize, d: usize, k: usize) -> Result<u64, EnumerationError> {
        let top = maxwt(n, d);
        if (k as u64) > top {
            return Ok(0);
        }
        self.count_by_weight(n, d, top - k as u64)
    }

    pub fn stabilization(
        &self,
        d: usize,
        k: usize,
        n_max: usize,
    ) -> Result<Stabilization, EulerianError> {
        if d == 0 {
            return Err(EulerianError::ZeroDescents);
        }
        let threshold = d + k + 1;
        if n_max < threshold {
            return Err(EulerianError::BelowThreshold { n_max, threshold });
        }
        let values = (threshold..=n_max)
            .map(|n| Ok((n, self.top_coefficient(n, d, k)?)))
            .collect::<Result<_, EnumerationError>>()?;
        Ok(Stabilization { d, k, values })
    }

    /// `a_k` of `W_d(t)`, read at the threshold `n = d+k+1`.
    pub fn wd_coefficient(&self, d: usize, k: usize) -> Result<u64, EulerianError> {
        if d == 0 {
            return Err(EulerianError::ZeroDescents);
        }
        Ok(self.top_coefficient(d + k + 1, d, k)?)
    }

    pub fn wd_series(&self, d: usize, terms: usize) -> Result<WdSeries, EulerianError> {
        let coefficients = (0..terms)
            .map(|k| self.wd_coefficient(d, k))
            .collect::<Result<_, _>>()?;
        Ok(WdSeries { d, coefficients })
    }
}

/// See [`QEulerianTable::stabilization`].
pub fn check_stabilization(
    d: usize,
    k: usize,
    n_max: usize,
    cfg: &EnumConfig,
) -> Result<Stabilization, EulerianError> {
    QEulerianTable::new(*cfg).stabilization(d, k, n_max)
}

pub fn wd_coefficient(d: usize, k: usize, cfg: &EnumConfig) -> Result<u64, EulerianError> {
    QEulerianTable::new(*cfg).wd_coefficient(d, k)
}

pub fn wd_series(d: usize, terms: usize, cfg: &EnumConfig) -> Result<WdSeries, EulerianError> {
    QEulerianTable::new(*cfg).wd_series(d, terms)
}
