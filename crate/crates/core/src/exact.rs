//! Exact minimum basis hitting sets for small ground sets.
//!
//! Cardinality mode searches target sizes `t = lb, lb+1, ...` and, for each,
//! runs a depth-first include/exclude search in element order. Weighted mode
//! is a depth-first branch and bound on total weight. Both share these prunes:
//!
//! * reachability: every matroid must still be spannable by the chosen
//!   elements plus the undecided ones (this forces coloops);
//! * profit bound: by submodularity the residual rank can only be covered if
//!   the best available marginal gains add up to it;
//! * zero-gain elements are never branched into.

use alloc::vec::Vec;

use crate::greedy::check_weights;
use crate::matroid::RankOracle;
use crate::{ElementSet, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest ground set accepted.
    pub max_ground: usize,
    /// Search nodes expanded before giving up.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_ground: 24,
            max_nodes: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExactStatus {
    Optimal,
    /// Budget ran out. The returned set is feasible (an upper bound) and no
    /// solution cheaper than `lower_bound` exists.
    Inconclusive {
        lower_bound: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    /// Sorted element indices.
    pub elements: Vec<usize>,
    pub weight: f64,
    pub status: ExactStatus,
    pub nodes_explored: u64,
}

impl ExactResult {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn is_optimal(&self) -> bool {
        self.status == ExactStatus::Optimal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deficit {
    pub matroid: usize,
    /// `full_rank - rank(F)`.
    pub missing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub deficits: Vec<Deficit>,
}

impl Verification {
    pub fn feasible(&self) -> bool {
        self.deficits.is_empty()
    }
}

/// Checks that `chosen` contains a basis of every matroid and lists the
/// matroids it falls short on.
pub fn verify_solution<M: RankOracle>(matroids: &[M], chosen: &ElementSet) -> Result<Verification> {
    let mut deficits = Vec::new();
    for (j, m) in matroids.iter().enumerate() {
        let rank = m.rank(chosen)?;
        if rank < m.full_rank() {
            deficits.push(Deficit {
                matroid: j,
                missing: m.full_rank() - rank,
            });
        }
    }
    Ok(Verification { deficits })
}

struct Abort;

struct Search<'a, M> {
    matroids: &'a [M],
    full_ranks: Vec<usize>,
    ground: usize,
    weights: Option<&'a [f64]>,
    nodes: u64,
    max_nodes: u64,
}

impl<M: RankOracle> Search<'_, M> {
    fn tick(&mut self) -> core::result::Result<(), Abort> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            Err(Abort)
        } else {
            Ok(())
        }
    }

    fn residual(&self, set: &ElementSet) -> usize {
        self.matroids
            .iter()
            .zip(&self.full_ranks)
            .map(|(m, &r)| r - m.eval_rank(set))
            .sum()
    }

    fn reachable(&self, chosen: &ElementSet, next: usize) -> bool {
        let mut available = chosen.clone();
        for e in next..self.ground {
            available.insert(e);
        }
        self.matroids
            .iter()
            .zip(&self.full_ranks)
            .all(|(m, &r)| m.eval_rank(&available) == r)
    }

    /// Marginal gains of the undecided elements `next..ground`.
    fn gains(&self, chosen: &ElementSet, next: usize) -> Vec<(usize, usize)> {
        let base: Vec<usize> = self.matroids.iter().map(|m| m.eval_rank(chosen)).collect();
        (next..self.ground)
            .map(|e| {
                let with = chosen.with(e);
                let g = self
                    .matroids
                    .iter()
                    .zip(&base)
                    .map(|(m, &b)| m.eval_rank(&with) - b)
                    .sum();
                (e, g)
            })
            .collect()
    }

    fn weight(&self, e: usize) -> f64 {
        self.weights.map_or(1.0, |w| w[e])
    }

    /// Looks for a feasible set extending `chosen` with at most `slots` more
    /// elements from `next..`.
    fn within(
        &mut self,
        chosen: &mut ElementSet,
        next: usize,
        slots: usize,
    ) -> core::result::Result<bool, Abort> {
        self.tick()?;
        let residual = self.residual(chosen);
        if residual == 0 {
            return Ok(true);
        }
        if slots == 0 || next >= self.ground || !self.reachable(chosen, next) {
            return Ok(false);
        }
        let mut gains = self.gains(chosen, next);
        let gain_next = gains[0].1;
        gains.sort_unstable_by_key(|g| core::cmp::Reverse(g.1));
        if gains.iter().take(slots).map(|g| g.1).sum::<usize>() < residual {
            return Ok(false);
        }
        if gain_next > 0 {
            chosen.insert(next);
            let found = self.within(chosen, next + 1, slots - 1)?;
            if found {
                return Ok(true);
            }
            chosen.remove(next);
        }
        self.within(chosen, next + 1, slots)
    }

    /// Fractional-cover lower bound on the extra weight needed.
    fn extra_weight_bound(&self, gains: &[(usize, usize)], residual: usize) -> f64 {
        let mut useful: Vec<(f64, usize)> = gains
            .iter()
            .filter(|g| g.1 > 0)
            .map(|&(e, g)| (self.weight(e) / g as f64, g))
            .collect();
        useful.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
        let mut left = residual as f64;
        let mut bound = 0.0;
        for (ratio, g) in useful {
            let take = left.min(g as f64);
            bound += ratio * take;
            left -= take;
            if left <= 0.0 {
                return bound;
            }
        }
        f64::INFINITY
    }

    fn branch_and_bound(
        &mut self,
        chosen: &mut ElementSet,
        weight: f64,
        next: usize,
        best: &mut (f64, ElementSet),
    ) -> core::result::Result<(), Abort> {
        self.tick()?;
        let residual = self.residual(chosen);
        if residual == 0 {
            if weight < best.0 {
                *best = (weight, chosen.clone());
            }
            return Ok(());
        }
        if next >= self.ground || !self.reachable(chosen, next) {
            return Ok(());
        }
        let gains = self.gains(chosen, next);
        if weight + self.extra_weight_bound(&gains, residual)
            >= best.0 - 1e-9 * best.0.abs().max(1.0)
        {
            return Ok(());
        }
        if gains[0].1 > 0 {
            chosen.insert(next);
            self.branch_and_bound(chosen, weight + self.weight(next), next + 1, best)?;
            chosen.remove(next);
        }
        self.branch_and_bound(chosen, weight, next + 1, best)
    }
}

/// Minimum-cardinality (or, with `weights`, minimum-weight) set containing a
/// basis of every matroid.
///
/// Returns [`ExactStatus::Inconclusive`] rather than a possibly wrong answer
/// when the node budget runs out.
pub fn exact_min_basis_hitting<M: RankOracle>(
    matroids: &[M],
    weights: Option<&[f64]>,
    budget: SearchBudget,
) -> Result<ExactResult> {
    let ground = match matroids.first() {
        Some(m) => m.ground_size(),
        None => weights.map_or(0, <[f64]>::len),
    };
    if let Some(m) = matroids.iter().find(|m| m.ground_size() != ground) {
        return Err(Error::GroundMismatch {
            expected: ground,
            found: m.ground_size(),
        });
    }
    if ground > budget.max_ground {
        return Err(Error::GroundTooLarge {
            size: ground,
            cap: budget.max_ground,
        });
    }
    if let Some(w) = weights {
        check_weights(w, ground)?;
    }
    let mut search = Search {
        matroids,
        full_ranks: matroids.iter().map(|m| m.full_rank()).collect(),
        ground,
        weights,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    let full = ElementSet::full(ground);
    let weigh = |set: &ElementSet| {
        set.iter()
            .map(|e| weights.map_or(1.0, |w| w[e]))
            .sum::<f64>()
    };

    if weights.is_some() {
        let mut best = (weigh(&full), full);
        let mut chosen = ElementSet::empty(ground);
        let root_bound = {
            let r0 = search.residual(&chosen);
            if r0 == 0 {
                0.0
            } else {
                search.extra_weight_bound(&search.gains(&chosen, 0), r0)
            }
        };
        let status = match search.branch_and_bound(&mut chosen, 0.0, 0, &mut best) {
            Ok(()) => ExactStatus::Optimal,
            Err(Abort) => ExactStatus::Inconclusive {
                lower_bound: root_bound,
            },
        };
        return Ok(ExactResult {
            elements: best.1.to_vec(),
            weight: best.0,
            status,
            nodes_explored: search.nodes,
        });
    }

    let lower = search.full_ranks.iter().copied().max().unwrap_or(0);
    for target in lower..=ground {
        let mut chosen = ElementSet::empty(ground);
        match search.within(&mut chosen, 0, target) {
            Ok(true) => {
                return Ok(ExactResult {
                    weight: chosen.len() as f64,
                    elements: chosen.to_vec(),
                    status: ExactStatus::Optimal,
                    nodes_explored: search.nodes,
                })
            }
            Ok(false) => {}
            Err(Abort) => {
                return Ok(ExactResult {
                    weight: ground as f64,
                    elements: full.to_vec(),
                    status: ExactStatus::Inconclusive {
                        lower_bound: target as f64,
                    },
                    nodes_explored: search.nodes,
                })
            }
        }
    }
    unreachable!("the full ground set contains a basis of every matroid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{GraphicMatroid, UniformRank1Matroid};
    use alloc::vec;

    fn counterexample() -> Vec<GraphicMatroid> {
        let edges = [(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];
        let subsets: [&[usize]; 9] = [
            &[1, 4, 5],
            &[2, 4, 5],
            &[3, 4, 5],
            &[1, 4],
            &[1, 5],
            &[2, 4],
            &[2, 5],
            &[3, 4],
            &[3, 5],
        ];
        subsets
            .iter()
            .map(|s| GraphicMatroid::new(6, &edges, s).unwrap())
            .collect()
    }

    #[test]
    fn counterexample_optimum_avoids_hub_edge() {
        let ms = counterexample();
        let r = exact_min_basis_hitting(&ms, None, SearchBudget::default()).unwrap();
        assert!(r.is_optimal());
        assert_eq!(r.elements, [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn triangle_needs_two_edges() {
        let ms = vec![GraphicMatroid::new(3, &[(0, 1), (0, 2), (1, 2)], &[0, 1, 2]).unwrap()];
        let r = exact_min_basis_hitting(&ms, None, SearchBudget::default()).unwrap();
        assert_eq!(r.cardinality(), 2);
    }

    #[test]
    fn rank_one_family_hit_by_shared_element() {
        // U = {1,2,3} as 0,1,2; T = {{1,2},{2,3}}
        let ms = vec![
            UniformRank1Matroid::new(3, &[0, 1]).unwrap(),
            UniformRank1Matroid::new(3, &[1, 2]).unwrap(),
        ];
        let r = exact_min_basis_hitting(&ms, None, SearchBudget::default()).unwrap();
        assert_eq!(r.elements, [1]);
        let w = [1.0, 5.0, 1.0];
        let r = exact_min_basis_hitting(&ms, Some(&w), SearchBudget::default()).unwrap();
        assert_eq!(r.elements, [0, 2]);
        assert_eq!(r.weight, 2.0);
    }

    #[test]
    fn verify_reports_deficits() {
        let ms = counterexample();
        let spokes = ElementSet::from_indices(7, 0..6).unwrap();
        assert!(verify_solution(&ms, &spokes).unwrap().feasible());
        let mut short = spokes.clone();
        short.remove(5); // {3,5}
        let v = verify_solution(&ms, &short).unwrap();
        assert_eq!(
            v.deficits,
            [
                Deficit {
                    matroid: 2,
                    missing: 1
                },
                Deficit {
                    matroid: 8,
                    missing: 1
                }
            ]
        );
        assert!(verify_solution(&ms, &ElementSet::full(7))
            .unwrap()
            .feasible());
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let ms = counterexample();
        let r = exact_min_basis_hitting(
            &ms,
            None,
            SearchBudget {
                max_nodes: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(matches!(r.status, ExactStatus::Inconclusive { .. }));
        assert!(verify_solution(
            &ms,
            &ElementSet::from_indices(7, r.elements.iter().copied()).unwrap()
        )
        .unwrap()
        .feasible());
    }

    #[test]
    fn ground_cap_is_enforced() {
        let ms = vec![UniformRank1Matroid::new(30, &[0]).unwrap()];
        assert_eq!(
            exact_min_basis_hitting(&ms, None, SearchBudget::default()),
            Err(Error::GroundTooLarge { size: 30, cap: 24 })
        );
    }
}
