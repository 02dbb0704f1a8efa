//! Max-profit greedy for minimum basis hitting sets.
//!
//! Each step adds the element whose insertion raises the most rank summed over
//! all matroids, `P(F, e) = Σ_j rank_j(F + e) - rank_j(F)`, until the residual
//! rank `R = Σ_j r_j - rank_j(F)` reaches zero. In unweighted mode the result is
//! within a factor `H(R_0)` of optimal.

use alloc::boxed::Box;
use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::matroid::{FreshTracker, RankOracle, RankTracker};
use crate::{ElementSet, Error, Result};

/// Which element wins among equal scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestIndex,
    HighestIndex,
}

/// How per-matroid rank gains are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProfitEvaluation {
    /// Oracle-specific incremental state (union-find for graphic matroids).
    #[default]
    Incremental,
    /// Re-evaluate the rank function on `F` and `F + e` for every query.
    Fresh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scan {
    /// Max-heap of stale profits; valid upper bounds by submodularity.
    #[default]
    Lazy,
    /// Recompute every candidate at every step.
    Naive,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyOptions {
    pub tie_break: TieBreak,
    pub evaluation: ProfitEvaluation,
    pub scan: Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub element: usize,
    pub profit: usize,
    /// Residual rank after this step.
    pub residual: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// Chosen elements in selection order.
    pub elements: Vec<usize>,
    pub weight: f64,
    /// Total rank `Σ_j r_j` at the start.
    pub r0: usize,
    /// `H(R_0)`.
    pub harmonic_bound: f64,
    pub steps: Vec<Step>,
    /// Selection used profit per unit weight. No approximation guarantee is
    /// claimed in this mode.
    pub weighted: bool,
}

impl SolveReport {
    /// Approximation factor against the optimum cardinality; `None` in
    /// weighted mode.
    pub fn guarantee(&self) -> Option<f64> {
        (!self.weighted).then_some(self.harmonic_bound)
    }

    pub fn sorted_elements(&self) -> Vec<usize> {
        let mut out = self.elements.clone();
        out.sort_unstable();
        out
    }
}

/// `H(n) = 1 + 1/2 + ... + 1/n`, with `H(0) = 0`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|t| 1.0 / t as f64).sum()
}

/// `P(F, e)`: total rank gained over all matroids by adding `e` to `F`.
pub fn profit<M: RankOracle>(matroids: &[M], chosen: &ElementSet, e: usize) -> Result<usize> {
    let ground = common_ground(matroids)?.unwrap_or(chosen.ground_size());
    chosen.check_ground(ground)?;
    if e >= ground {
        return Err(Error::ElementOutOfRange { element: e, ground });
    }
    if chosen.contains(e) {
        return Err(Error::AlreadyChosen(e));
    }
    let with = chosen.with(e);
    Ok(matroids
        .iter()
        .map(|m| m.eval_rank(&with) - m.eval_rank(chosen))
        .sum())
}

fn common_ground<M: RankOracle>(matroids: &[M]) -> Result<Option<usize>> {
    let Some(first) = matroids.first() else {
        return Ok(None);
    };
    let expected = first.ground_size();
    for m in matroids {
        if m.ground_size() != expected {
            return Err(Error::GroundMismatch {
                expected,
                found: m.ground_size(),
            });
        }
    }
    Ok(Some(expected))
}

pub(crate) fn check_weights(weights: &[f64], ground: usize) -> Result<()> {
    if weights.len() != ground {
        return Err(Error::WeightCount {
            expected: ground,
            found: weights.len(),
        });
    }
    match weights.iter().position(|w| !(*w > 0.0 && w.is_finite())) {
        Some(index) => Err(Error::NonPositiveWeight {
            index,
            weight: weights[index],
        }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    score: f64,
    element: usize,
    tie: TieBreak,
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.score
            .total_cmp(&other.score)
            .then_with(|| match self.tie {
                TieBreak::LowestIndex => other.element.cmp(&self.element),
                TieBreak::HighestIndex => self.element.cmp(&other.element),
            })
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Candidate {}

struct Profits<'a> {
    trackers: Vec<Box<dyn RankTracker + 'a>>,
    // matroids in which each element is not a loop
    relevant: Vec<Vec<u32>>,
}

impl<'a> Profits<'a> {
    fn new<M: RankOracle>(matroids: &'a [M], ground: usize, evaluation: ProfitEvaluation) -> Self {
        let trackers = matroids
            .iter()
            .map(|m| match evaluation {
                ProfitEvaluation::Incremental => m.tracker(),
                ProfitEvaluation::Fresh => {
                    Box::new(FreshTracker::new(m)) as Box<dyn RankTracker + 'a>
                }
            })
            .collect();
        let mut relevant = alloc::vec![Vec::new(); ground];
        for (j, m) in matroids.iter().enumerate() {
            for (e, list) in relevant.iter_mut().enumerate() {
                if !m.is_loop(e) {
                    list.push(j as u32);
                }
            }
        }
        Profits { trackers, relevant }
    }

    fn profit(&self, e: usize) -> usize {
        self.relevant[e]
            .iter()
            .map(|&j| self.trackers[j as usize].gain(e))
            .sum()
    }

    fn insert(&mut self, e: usize) {
        for &j in &self.relevant[e] {
            self.trackers[j as usize].insert(e);
        }
    }
}

/// Runs the greedy until every matroid's basis is hit.
///
/// With `weights`, the element maximising `profit / weight` is chosen instead.
pub fn greedy_solve<M: RankOracle>(
    matroids: &[M],
    weights: Option<&[f64]>,
    options: GreedyOptions,
) -> Result<SolveReport> {
    let ground = match common_ground(matroids)? {
        Some(g) => g,
        None => weights.map_or(0, <[f64]>::len),
    };
    if let Some(w) = weights {
        check_weights(w, ground)?;
    }
    let r0: usize = matroids.iter().map(|m| m.full_rank()).sum();
    let mut profits = Profits::new(matroids, ground, options.evaluation);
    let score = |e: usize, p: usize| match weights {
        Some(w) => p as f64 / w[e],
        None => p as f64,
    };
    let candidate = |e: usize, p: usize| Candidate {
        score: score(e, p),
        element: e,
        tie: options.tie_break,
    };

    let mut chosen = ElementSet::empty(ground);
    let mut residual = r0;
    let mut steps = Vec::new();

    match options.scan {
        Scan::Naive => {
            while residual > 0 {
                let best = (0..ground)
                    .filter(|&e| !chosen.contains(e))
                    .map(|e| {
                        let p = profits.profit(e);
                        (candidate(e, p), p)
                    })
                    .filter(|&(_, p)| p > 0)
                    .max_by(|a, b| a.0.cmp(&b.0));
                let Some((c, p)) = best else {
                    return Err(Error::Stalled { residual });
                };
                chosen.insert(c.element);
                profits.insert(c.element);
                residual -= p;
                steps.push(Step {
                    element: c.element,
                    profit: p,
                    residual,
                });
            }
        }
        Scan::Lazy => {
            let mut heap: BinaryHeap<Candidate> = (0..ground)
                .filter_map(|e| {
                    let p = profits.profit(e);
                    (p > 0).then(|| candidate(e, p))
                })
                .collect();
            while residual > 0 {
                let Some(top) = heap.pop() else {
                    return Err(Error::Stalled { residual });
                };
                let p = profits.profit(top.element);
                if p == 0 {
                    continue;
                }
                let fresh = candidate(top.element, p);
                if heap.peek().is_some_and(|next| *next > fresh) {
                    heap.push(fresh);
                    continue;
                }
                chosen.insert(fresh.element);
                profits.insert(fresh.element);
                residual -= p;
                steps.push(Step {
                    element: fresh.element,
                    profit: p,
                    residual,
                });
            }
        }
    }

    let elements: Vec<usize> = steps.iter().map(|s| s.element).collect();
    let weight = match weights {
        Some(w) => elements.iter().map(|&e| w[e]).sum(),
        None => elements.len() as f64,
    };
    Ok(SolveReport {
        elements,
        weight,
        r0,
        harmonic_bound: harmonic(r0),
        steps,
        weighted: weights.is_some(),
    })
}
