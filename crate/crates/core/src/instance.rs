//! Spanning-tree hitting set instances: a graph plus vertex subsets, each
//! turned into the graphic matroid of its induced subgraph.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exact::{
    exact_min_basis_hitting, verify_solution, ExactResult, SearchBudget, Verification,
};
use crate::graph::Graph;
use crate::greedy::{greedy_solve, GreedyOptions, SolveReport};
use crate::matroid::{GraphicMatroid, RankOracle};
use crate::union_find::UnionFind;
use crate::{ElementSet, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConnectivityPolicy {
    /// Every `G[S_i]` must be connected.
    #[default]
    RequireConnected,
    /// Disconnected subsets are accepted; their bases are spanning forests.
    AllowForest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SthsInstance {
    pub graph: Graph,
    /// Vertex indices of `S_1..S_k`.
    pub subsets: Vec<Vec<usize>>,
}

impl SthsInstance {
    pub fn new(graph: Graph, subsets: Vec<Vec<usize>>) -> Self {
        SthsInstance { graph, subsets }
    }

    pub fn from_labels<S: AsRef<str>>(graph: Graph, subsets: &[Vec<S>]) -> Result<Self> {
        let subsets = subsets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|l| {
                        graph
                            .vertex_index(l.as_ref())
                            .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SthsInstance { graph, subsets })
    }

    /// Checks the instance and builds one graphic matroid per subset over the
    /// shared edge ground set. Repeated vertices inside a subset are collapsed
    /// and reported as warnings.
    pub fn validate(mut self, policy: ConnectivityPolicy) -> Result<ValidatedInstance> {
        let n = self.graph.vertex_count();
        let mut problems = Vec::new();
        let mut warnings = Vec::new();
        for (i, subset) in self.subsets.iter_mut().enumerate() {
            if let Some(&v) = subset.iter().find(|&&v| v >= n) {
                problems.push(format!("subset {i} references unknown vertex index {v}"));
                continue;
            }
            let before = subset.len();
            subset.sort_unstable();
            subset.dedup();
            if subset.len() != before {
                warnings.push(format!(
                    "subset {i}: {} repeated vertex(es) collapsed",
                    before - subset.len()
                ));
            }
        }
        if !problems.is_empty() {
            return Err(Error::InvalidInstance(problems));
        }

        // Only edges inside some subset can ever raise a rank.
        let mut inside = alloc::vec![false; self.graph.edge_count()];
        let mut member = alloc::vec![false; n];
        for subset in &self.subsets {
            for &v in subset {
                member[v] = true;
            }
            for (e, edge) in self.graph.edges().iter().enumerate() {
                inside[e] |= member[edge.u] && member[edge.v];
            }
            for &v in subset {
                member[v] = false;
            }
        }
        let ground: Vec<usize> = (0..inside.len()).filter(|&e| inside[e]).collect();
        let ends: Vec<(usize, usize)> = ground
            .iter()
            .map(|&e| (self.graph.edges()[e].u, self.graph.edges()[e].v))
            .collect();

        let mut matroids = Vec::with_capacity(self.subsets.len());
        for (i, subset) in self.subsets.iter().enumerate() {
            let m = GraphicMatroid::new(n, &ends, subset)?;
            if policy == ConnectivityPolicy::RequireConnected
                && subset.len() > 1
                && m.full_rank() + 1 != subset.len()
            {
                let labels: Vec<&str> = subset.iter().map(|&v| self.graph.label(v)).collect();
                problems.push(format!(
                    "subset {i} {{{}}} does not induce a connected subgraph",
                    labels.join(", ")
                ));
            }
            matroids.push(m);
        }
        if !problems.is_empty() {
            return Err(Error::InvalidInstance(problems));
        }
        Ok(ValidatedInstance {
            instance: self,
            policy,
            warnings,
            ground,
            matroids,
        })
    }
}

/// Report from whichever solver produced a [`Solution`].
#[derive(Debug, Clone, PartialEq)]
pub enum SolverReport {
    Greedy(SolveReport),
    Exact(ExactResult),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Sorted graph edge indices of `F`.
    pub edges: Vec<usize>,
    /// One spanning tree (or forest) per subset, as graph edge indices.
    pub trees: Vec<Vec<usize>>,
    /// `w(F)` under the graph's edge weights.
    pub weight: f64,
    pub report: SolverReport,
}

#[derive(Debug, Clone)]
pub struct ValidatedInstance {
    instance: SthsInstance,
    policy: ConnectivityPolicy,
    warnings: Vec<String>,
    ground: Vec<usize>,
    matroids: Vec<GraphicMatroid>,
}

impl ValidatedInstance {
    pub fn instance(&self) -> &SthsInstance {
        &self.instance
    }

    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    pub fn policy(&self) -> ConnectivityPolicy {
        self.policy
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Graph edge index of every ground element.
    pub fn ground_edges(&self) -> &[usize] {
        &self.ground
    }

    pub fn matroids(&self) -> &[GraphicMatroid] {
        &self.matroids
    }

    /// `R_0 = Σ_i |S_i| - c(G[S_i])`.
    pub fn total_rank(&self) -> usize {
        self.matroids.iter().map(|m| m.full_rank()).sum()
    }

    pub fn ground_weights(&self) -> Vec<f64> {
        self.ground
            .iter()
            .map(|&e| self.graph().edges()[e].weight)
            .collect()
    }

    /// Maps graph edges onto the ground set. Edges outside every subset are
    /// dropped since they never matter.
    pub fn to_ground(&self, edges: &[usize]) -> Result<ElementSet> {
        let mut set = ElementSet::empty(self.ground.len());
        for &e in edges {
            if e >= self.graph().edge_count() {
                return Err(Error::UnknownEdge(e));
            }
            if let Ok(pos) = self.ground.binary_search(&e) {
                set.insert(pos);
            }
        }
        Ok(set)
    }

    pub fn to_graph_edges(&self, set: &ElementSet) -> Vec<usize> {
        set.iter().map(|pos| self.ground[pos]).collect()
    }

    pub fn verify(&self, edges: &[usize]) -> Result<Verification> {
        verify_solution(&self.matroids, &self.to_ground(edges)?)
    }

    /// One spanning tree per subset drawn from `edges`: Kruskal over the
    /// edges of `F` inside `G[S_i]`, by weight and then edge index.
    pub fn extract_trees(&self, edges: &[usize]) -> Result<Vec<Vec<usize>>> {
        let verification = self.verify(edges)?;
        if !verification.feasible() {
            return Err(Error::Infeasible(
                verification
                    .deficits
                    .iter()
                    .map(|d| (d.matroid, d.missing))
                    .collect(),
            ));
        }
        let graph = self.graph();
        let mut chosen: Vec<usize> = edges.to_vec();
        chosen.sort_unstable_by(|&a, &b| {
            graph.edges()[a]
                .weight
                .total_cmp(&graph.edges()[b].weight)
                .then(a.cmp(&b))
        });
        chosen.dedup();
        let mut local = alloc::vec![usize::MAX; graph.vertex_count()];
        let mut trees = Vec::with_capacity(self.instance.subsets.len());
        for subset in &self.instance.subsets {
            for (i, &v) in subset.iter().enumerate() {
                local[v] = i;
            }
            let mut uf = UnionFind::new(subset.len());
            let mut tree = Vec::new();
            for &e in &chosen {
                let edge = graph.edges()[e];
                let (a, b) = (local[edge.u], local[edge.v]);
                if a != usize::MAX && b != usize::MAX && uf.union(a, b) {
                    tree.push(e);
                }
            }
            tree.sort_unstable();
            trees.push(tree);
            for &v in subset {
                local[v] = usize::MAX;
            }
        }
        Ok(trees)
    }

    fn finish(&self, set: &ElementSet, report: SolverReport) -> Result<Solution> {
        let mut edges = self.to_graph_edges(set);
        edges.sort_unstable();
        let trees = self.extract_trees(&edges)?;
        let weight = self.graph().weight_of(edges.iter().copied());
        Ok(Solution {
            edges,
            trees,
            weight,
            report,
        })
    }

    /// Greedy; `weighted` selects by profit per unit edge weight.
    pub fn solve_greedy(&self, weighted: bool, options: GreedyOptions) -> Result<Solution> {
        let weights = weighted.then(|| self.ground_weights());
        let report = greedy_solve(&self.matroids, weights.as_deref(), options)?;
        let set = ElementSet::from_indices(self.ground.len(), report.elements.iter().copied())?;
        self.finish(&set, SolverReport::Greedy(report))
    }

    /// Exact optimum by cardinality, or by edge weight when `weighted`.
    pub fn solve_exact(&self, weighted: bool, budget: SearchBudget) -> Result<Solution> {
        let weights = weighted.then(|| self.ground_weights());
        let result = if self.matroids.is_empty() {
            exact_min_basis_hitting(&[] as &[GraphicMatroid], weights.as_deref(), budget)?
        } else {
            exact_min_basis_hitting(&self.matroids, weights.as_deref(), budget)?
        };
        let set = ElementSet::from_indices(self.ground.len(), result.elements.iter().copied())?;
        self.finish(&set, SolverReport::Exact(result))
    }
}
