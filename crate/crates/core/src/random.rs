//! Seeded random instances for tests and benchmarks.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::instance::SthsInstance;
use crate::union_find::UnionFind;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomInstanceParams {
    pub seed: u64,
    pub vertices: usize,
    pub subsets: usize,
    pub min_subset: usize,
    pub max_subset: usize,
    /// Probability of each vertex pair being an edge before repair.
    pub edge_density: f64,
}

impl Default for RandomInstanceParams {
    fn default() -> Self {
        RandomInstanceParams {
            seed: 1,
            vertices: 6,
            subsets: 4,
            min_subset: 2,
            max_subset: 4,
            edge_density: 0.8,
        }
    }
}

/// Draws a graph `G(n, p)` and `k` uniformly random vertex subsets, then adds
/// edges until every `G[S_i]` is connected. Repair joins components with the
/// lexicographically first missing pairs, so the result depends only on the
/// parameters.
pub fn generate_random_instance(params: &RandomInstanceParams) -> Result<SthsInstance> {
    let RandomInstanceParams {
        seed,
        vertices: n,
        subsets: k,
        min_subset,
        max_subset,
        edge_density,
    } = *params;
    if !(0.0..=1.0).contains(&edge_density) {
        return Err(Error::InvalidParameters(format!(
            "edge density {edge_density} outside [0, 1]"
        )));
    }
    if k > 0 && (min_subset == 0 || min_subset > max_subset || max_subset > n) {
        return Err(Error::InvalidParameters(format!(
            "subset sizes {min_subset}..={max_subset} impossible with {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacent = alloc::vec![false; n * n];
    for u in 0..n {
        for v in u + 1..n {
            adjacent[u * n + v] = rng.random_bool(edge_density);
        }
    }
    let mut subsets = Vec::with_capacity(k);
    for _ in 0..k {
        let size = rng.random_range(min_subset..=max_subset);
        let mut subset = index::sample(&mut rng, n, size).into_vec();
        subset.sort_unstable();

        let mut uf = UnionFind::new(size);
        for i in 0..size {
            for j in i + 1..size {
                if adjacent[subset[i] * n + subset[j]] {
                    uf.union(i, j);
                }
            }
        }
        for i in 0..size {
            for j in i + 1..size {
                if uf.union(i, j) {
                    adjacent[subset[i] * n + subset[j]] = true;
                }
            }
        }
        subsets.push(subset);
    }

    let mut builder = Graph::builder((0..n).map(|v| format!("v{v}")))?;
    for u in 0..n {
        for v in u + 1..n {
            if adjacent[u * n + v] {
                builder.add_edge(u, v, 1.0)?;
            }
        }
    }
    Ok(SthsInstance::new(builder.build(), subsets))
}
