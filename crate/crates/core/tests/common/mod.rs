//! Slow, direct reimplementations used as oracles. Nothing here shares code
//! with the library beyond `Label`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

pub type Label = u32;

/// The word with `n+1` appended.
pub fn appended(word: &[Label]) -> Vec<Label> {
    let mut t = word.to_vec();
    t.push(word.len() as Label + 1);
    t
}

/// Splits `tau` around its minimum: left part greedily cut after each running
/// maximum, right part as a single block. Returns (min, blocks).
fn split(tau: &[Label]) -> (Label, Vec<Vec<Label>>) {
    let idx = (0..tau.len()).min_by_key(|&i| tau[i]).unwrap();
    let mut blocks = Vec::new();
    let mut rest = &tau[..idx];
    while !rest.is_empty() {
        let top = (0..rest.len()).max_by_key(|&i| rest[i]).unwrap();
        blocks.push(rest[..=top].to_vec());
        rest = &rest[top + 1..];
    }
    if idx + 1 < tau.len() {
        blocks.push(tau[idx + 1..].to_vec());
    }
    (tau[idx], blocks)
}

/// Edges of the maximum-weight tree, built by slicing.
pub fn max_weight_edges(word: &[Label]) -> BTreeSet<(Label, Label)> {
    fn go(tau: &[Label], out: &mut BTreeSet<(Label, Label)>) {
        if tau.len() <= 1 {
            return;
        }
        let (m, blocks) = split(tau);
        for b in blocks {
            let top = *b.iter().max().unwrap();
            out.insert((m.min(top), m.max(top)));
            go(&b, out);
        }
    }
    let mut out = BTreeSet::new();
    go(&appended(word), &mut out);
    out
}

/// Parent of every label in the minimum decomposition tree (root maps to 0).
pub fn min_decomp_parents(word: &[Label]) -> Vec<Label> {
    fn go(tau: &[Label], parent: &mut [Label]) {
        if tau.len() <= 1 {
            return;
        }
        let (m, blocks) = split(tau);
        for b in blocks {
            parent[*b.iter().min().unwrap() as usize] = m;
            go(&b, parent);
        }
    }
    let tau = appended(word);
    let mut parent = vec![0; tau.len() + 1];
    go(&tau, &mut parent);
    parent
}

pub fn adjacency(nodes: usize, edges: &BTreeSet<(Label, Label)>) -> Vec<Vec<Label>> {
    let mut adj = vec![Vec::new(); nodes + 1];
    for &(a, b) in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    adj
}

pub fn is_local_max(adj: &[Vec<Label>], v: Label) -> bool {
    adj[v as usize].iter().all(|&u| u < v)
}

fn component(adj: &[Vec<Label>], alive: &BTreeSet<Label>, start: Label) -> BTreeSet<Label> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in &adj[v as usize] {
            if alive.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen
}

/// The recursive weight, straight from its definition, with local-maximum
/// status taken in the whole tree.
pub fn recursive_weight(adj: &[Vec<Label>], nodes: &BTreeSet<Label>) -> u64 {
    if nodes.len() <= 1 {
        return 0;
    }
    let m = *nodes.iter().next().unwrap();
    let mut alive = nodes.clone();
    alive.remove(&m);
    let mut total = 0;
    for &u in &adj[m as usize] {
        if !alive.contains(&u) {
            continue;
        }
        let piece = component(adj, &alive, u);
        total += piece
            .iter()
            .filter(|&&v| v < u && is_local_max(adj, v))
            .count() as u64;
        total += recursive_weight(adj, &piece);
    }
    total
}

/// Weight of a permutation via its maximum-weight tree and the definition.
pub fn oracle_weight(word: &[Label]) -> u64 {
    let nodes = word.len() + 1;
    let adj = adjacency(nodes, &max_weight_edges(word));
    recursive_weight(&adj, &(1..=nodes as Label).collect())
}

/// Nodes reachable from `i` through labels `>= i`.
pub fn subtree(adj: &[Vec<Label>], i: Label) -> BTreeSet<Label> {
    let alive = (i..adj.len() as Label).collect();
    component(adj, &alive, i)
}

pub fn descents(word: &[Label]) -> usize {
    let t = appended(word);
    t.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every permutation of `1..=n` in lexicographic order, by recursion.
pub fn permutations(n: usize) -> Vec<Vec<Label>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n as Label {
        for rest in permutations(n - 1) {
            let mut w = vec![first];
            w.extend(rest.into_iter().map(|v| if v >= first { v + 1 } else { v }));
            out.push(w);
        }
    }
    out
}

pub fn random_word(rng: &mut impl Rng, n: usize) -> Vec<Label> {
    let mut w: Vec<Label> = (1..=n as Label).collect();
    w.shuffle(rng);
    w
}

/// Table of two-kind partition counts for `n = 0..=10`, as published.
pub const PUBLISHED_TRIANGLE: [&[u64]; 11] = [
    &[1],
    &[1, 1],
    &[2, 3, 1],
    &[3, 6, 4, 1],
    &[5, 12, 11, 5, 1],
    &[7, 20, 24, 16, 6, 1],
    &[11, 35, 49, 41, 22, 7, 1],
    &[15, 54, 89, 91, 63, 29, 8, 1],
    &[22, 86, 158, 186, 155, 92, 37, 9, 1],
    &[30, 128, 262, 351, 342, 247, 129, 46, 10, 1],
    &[42, 192, 428, 635, 700, 590, 376, 175, 56, 11, 1],
];

/// The published permutation with fifteen entries used as a running example.
pub const RUNNING_EXAMPLE: [Label; 15] = [1, 12, 15, 9, 10, 5, 7, 11, 6, 4, 13, 3, 8, 2, 14];
