//! Exhaustive walks over `S_n`.
//!
//! `S_n` is cut into `n` blocks by first element; each block is walked in
//! lexicographic order on its own thread and the per-block results are
//! folded together. Folds used by this crate are commutative, so the output
//! does not depend on the thread count.

use rayon::prelude::*;
use thiserror::Error;

use crate::perm::{next_permutation, Label};

/// Default cap on `n` for anything that walks all of `S_n`.
pub const DEFAULT_MAX_N: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the exhaustive limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("n must be at least 1")]
    Empty,
    #[error("could not start thread pool: {0}")]
    ThreadPool(String),
}

/// Limits and parallelism for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_n: usize,
    /// `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            threads: None,
        }
    }
}

impl EnumConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn check(&self, n: usize) -> Result<(), EnumerationError> {
        if n == 0 {
            return Err(EnumerationError::Empty);
        }
        if n > self.max_n {
            return Err(EnumerationError::LimitExceeded {
                n,
                limit: self.max_n,
            });
        }
        Ok(())
    }

    /// Runs `f` inside a pool sized per `threads`.
    pub(crate) fn install<R: Send>(
        &self,
        f: impl FnOnce() -> R + Send,
    ) -> Result<R, EnumerationError> {
        match self.threads {
            None => Ok(f()),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map(|pool| pool.install(f))
                .map_err(|e| EnumerationError::ThreadPool(e.to_string())),
        }
    }
}

/// Folds every permutation of `S_n`.
///
/// `init` creates per-block state, `visit` sees each permutation as a slice,
/// and `merge` combines block states. Block order of the merge is fixed
/// (first element ascending).
pub fn fold_permutations<S, I, V, M>(
    n: usize,
    cfg: &EnumConfig,
    init: I,
    visit: V,
    merge: M,
) -> Result<S, EnumerationError>
where
    S: Send,
    I: Fn() -> S + Sync + Send,
    V: Fn(&mut S, &[Label]) + Sync + Send,
    M: Fn(S, S) -> S + Sync + Send,
{
    cfg.check(n)?;
    cfg.install(|| {
        let blocks: Vec<S> = (1..=n as Label)
            .into_par_iter()
            .map(|first| {
                let mut state = init();
                let mut word: Vec<Label> = std::iter::once(first)
                    .chain((1..=n as Label).filter(|&v| v != first))
                    .collect();
                loop {
                    visit(&mut state, &word);
                    if !next_permutation(&mut word[1..]) {
                        break;
                    }
                }
                state
            })
            .collect();
        blocks.into_iter().reduce(&merge).expect("n >= 1")
    })
}
