//! Maxmin trees and permutation weights.
//!
//! A permutation `σ ∈ S_n` determines a maximum-weight maxmin tree on
//! `n + 1` nodes ([`tree::build_max_weight_tree`]); its weight is the weight
//! of that tree. This crate computes it five ways:
//!
//! | route | module | cost |
//! |---|---|---|
//! | recursive definition on the tree | [`tree`] | `O(n^2)` |
//! | descent counts of local-min subtrees | [`tree`] | `O(n^2)` |
//! | subtree ranges, scanned | [`weight`] | `O(n^2)` |
//! | subtree ranges, precomputed | [`weight::WeightEngine`] | `O(n log n)` |
//! | leaf counts of the minimum decomposition | [`min_decomp`] | `O(n log n)` |
//!
//! On top of that sit exhaustive q-Eulerian polynomials and the `W_d(t)`
//! series ([`eulerian`]), the partition triangle `T(n, k)` ([`partitions`]),
//! and the stem correspondence between the two ([`bijection`]).
//!
//! ```
//! use maxmin::perm::parse_permutation;
//! use maxmin::weight::weight_accelerated;
//!
//! let p = parse_permutation("1 3 2").unwrap();
//! assert_eq!(weight_accelerated(&p), 1);
//! ```

pub mod bijection;
pub mod cli;
pub mod enumerate;
pub mod eulerian;
pub mod min_decomp;
pub mod partitions;
pub mod perm;
pub mod poly;
mod rmq;
pub mod tree;
pub mod weight;

pub use enumerate::EnumConfig;
pub use perm::{parse_permutation, Permutation};
