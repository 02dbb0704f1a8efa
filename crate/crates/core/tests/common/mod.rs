//! Brute-force references kept apart from the library's search code.
#![allow(dead_code)]

use hitting_core::{ElementSet, RankOracle};

/// Smallest set containing a basis of every matroid, scanning all subsets in
/// order of cardinality and then mask value.
pub fn brute_min_hitting<M: RankOracle>(matroids: &[M], ground: usize) -> Vec<usize> {
    assert!(ground <= 20);
    let mut masks: Vec<u32> = (0..1u32 << ground).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let set = ElementSet::from_mask(ground, mask as u64);
        if matroids
            .iter()
            .all(|m| m.rank(&set).unwrap() == m.full_rank())
        {
            return set.to_vec();
        }
    }
    unreachable!()
}

/// Minimum total weight of a set containing a basis of every matroid.
pub fn brute_min_weight<M: RankOracle>(matroids: &[M], weights: &[f64]) -> f64 {
    let ground = weights.len();
    assert!(ground <= 20);
    (0..1u64 << ground)
        .map(|mask| ElementSet::from_mask(ground, mask))
        .filter(|set| {
            matroids
                .iter()
                .all(|m| m.rank(set).unwrap() == m.full_rank())
        })
        .map(|set| set.iter().map(|e| weights[e]).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
}

/// True if the edges (pairs of vertex ids) contain a cycle, by DFS.
pub fn has_cycle(vertices: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); vertices];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut seen = vec![false; vertices];
    for start in 0..vertices {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, usize::MAX)];
        while let Some((x, via)) = stack.pop() {
            if seen[x] {
                return true;
            }
            seen[x] = true;
            for &(y, edge) in &adj[x] {
                if edge != via {
                    stack.push((y, edge));
                }
            }
        }
    }
    false
}

/// Graphic rank as the size of the largest acyclic subset of `edges` whose
/// endpoints both lie in `subset`.
pub fn brute_graphic_rank(
    vertices: usize,
    edges: &[(usize, usize)],
    subset: &[usize],
    chosen: &[usize],
) -> usize {
    let inside: Vec<(usize, usize)> = chosen
        .iter()
        .map(|&e| edges[e])
        .filter(|(u, v)| subset.contains(u) && subset.contains(v))
        .collect();
    let mut best = 0;
    for mask in 0u32..1 << inside.len() {
        let pick: Vec<_> = (0..inside.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| inside[i])
            .collect();
        if pick.len() > best && !has_cycle(vertices, &pick) {
            best = pick.len();
        }
    }
    best
}

pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|t| 1.0 / t as f64).sum()
}
