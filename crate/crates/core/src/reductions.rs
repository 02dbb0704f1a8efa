//! Hardness gadgets as instance generators.
//!
//! Each construction records the optimum identity it satisfies so that the
//! produced instance can be cross-checked with exact solvers on both sides:
//!
//! * Min Hitting Set → weighted spanning-tree hitting set, `h = h'·n³ + C(n,2)`;
//! * Vertex Cover → unweighted spanning-tree hitting set, `h = c + |E'|`;
//! * Min Hitting Set → min basis hitting set over rank-1 uniform matroids,
//!   with equal optima.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exact::SearchBudget;
use crate::graph::Graph;
use crate::instance::{ConnectivityPolicy, SthsInstance};
use crate::matroid::UniformRank1Matroid;
use crate::{Error, Result};

/// Source optima are found by plain enumeration, capped at this many
/// universe elements or vertices.
pub const MAX_SOURCE_BRUTE_FORCE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    universe: Vec<String>,
    sets: Vec<Vec<usize>>,
}

impl HittingSetInstance {
    /// Sets are given as universe indices; repeats inside a set collapse.
    pub fn new(universe: Vec<String>, sets: Vec<Vec<usize>>) -> Result<Self> {
        let n = universe.len();
        let mut seen = alloc::collections::BTreeSet::new();
        for label in &universe {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::EmptySet(i));
            }
            if let Some(&u) = set.iter().find(|&&u| u >= n) {
                return Err(Error::ElementOutOfRange {
                    element: u,
                    ground: n,
                });
            }
            set.sort_unstable();
            set.dedup();
            clean.push(set);
        }
        Ok(HittingSetInstance {
            universe,
            sets: clean,
        })
    }

    pub fn from_labels<S: AsRef<str>>(universe: Vec<String>, sets: &[Vec<S>]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|set| {
                set.iter()
                    .map(|l| {
                        universe
                            .iter()
                            .position(|u| u == l.as_ref())
                            .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, sets)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Minimum hitting set by enumerating universe subsets in order of size.
    pub fn brute_force_optimum(&self) -> Result<Vec<usize>> {
        let n = self.universe.len();
        if n > MAX_SOURCE_BRUTE_FORCE {
            return Err(Error::GroundTooLarge {
                size: n,
                cap: MAX_SOURCE_BRUTE_FORCE,
            });
        }
        let masks: Vec<u32> = self
            .sets
            .iter()
            .map(|s| s.iter().fold(0u32, |m, &u| m | 1 << u))
            .collect();
        let mut best = (1u32 << n) - 1;
        for cand in 0u32..1 << n {
            if cand.count_ones() < best.count_ones() && masks.iter().all(|m| m & cand != 0) {
                best = cand;
            }
        }
        Ok((0..n).filter(|&u| best >> u & 1 == 1).collect())
    }
}

/// Minimum vertex cover size by enumeration.
pub fn brute_force_vertex_cover(graph: &Graph) -> Result<usize> {
    let n = graph.vertex_count();
    if n > MAX_SOURCE_BRUTE_FORCE {
        return Err(Error::GroundTooLarge {
            size: n,
            cap: MAX_SOURCE_BRUTE_FORCE,
        });
    }
    let covered = |mask: u32| {
        graph
            .edges()
            .iter()
            .all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1)
    };
    Ok((0u32..1 << n)
        .filter(|&m| covered(m))
        .map(u32::count_ones)
        .min()
        .unwrap_or(0) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `h = h'·n³ + C(n, 2)` with `n = |U|`.
    WeightedHittingSet { n: usize },
    /// `h = c + |E'|`.
    VertexCover { source_edges: usize },
}

impl Identity {
    /// Gadget optimum predicted from the source optimum.
    pub fn predict(&self, source_optimum: usize) -> f64 {
        match *self {
            Identity::WeightedHittingSet { n } => {
                let n = n as f64;
                source_optimum as f64 * n * n * n + n * (n - 1.0) / 2.0
            }
            Identity::VertexCover { source_edges } => (source_optimum + source_edges) as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReductionSource {
    HittingSet(HittingSetInstance),
    VertexCover(Graph),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate {
    pub source: ReductionSource,
    pub instance: SthsInstance,
    pub identity: Identity,
    pub apex: String,
    /// Whether the gadget optimum is measured by weight (else cardinality).
    pub weighted: bool,
}

fn apex_label<'a>(taken: impl Iterator<Item = &'a String> + Clone) -> String {
    let free = |label: &str| !taken.clone().any(|t| t == label);
    if free("r") {
        return "r".to_string();
    }
    (1..)
        .map(|i| format!("r_{i}"))
        .find(|l| free(l))
        .expect("unbounded suffixes")
}

/// Min Hitting Set → weighted spanning-tree hitting set. Vertices are
/// `U + r`; `K_U` has weight 1 and every `{r, u}` weight `n³`; the subsets are
/// all pairs `{u_i, u_j}` followed by `T_i + r`.
pub fn reduce_hitting_set_weighted(hs: &HittingSetInstance) -> Result<ReductionCertificate> {
    let n = hs.universe.len();
    let apex = apex_label(hs.universe.iter());
    let heavy = (n * n * n) as f64;
    let mut builder = Graph::builder(hs.universe.iter().cloned())?;
    let r = builder.add_vertex(apex.clone())?;
    let mut subsets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            builder.add_edge(i, j, 1.0)?;
            subsets.push(alloc::vec![i, j]);
        }
        builder.add_edge(i, r, heavy)?;
    }
    for set in &hs.sets {
        let mut s = set.clone();
        s.push(r);
        subsets.push(s);
    }
    Ok(ReductionCertificate {
        source: ReductionSource::HittingSet(hs.clone()),
        instance: SthsInstance::new(builder.build(), subsets),
        identity: Identity::WeightedHittingSet { n },
        apex,
        weighted: true,
    })
}

/// Vertex Cover → unweighted spanning-tree hitting set: the hitting-set
/// gadget with `E'` in place of `K_U`. Every edge `{a, b}` of `g` yields the
/// subsets `{a, b}` and `{a, b, r}`.
pub fn reduce_vertex_cover_unweighted(g: &Graph) -> Result<ReductionCertificate> {
    let apex = apex_label(g.vertices().iter());
    let mut builder = Graph::builder(g.vertices().iter().cloned())?;
    let r = builder.add_vertex(apex.clone())?;
    for v in 0..g.vertex_count() {
        builder.add_edge(v, r, 1.0)?;
    }
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for e in g.edges() {
        builder.add_edge(e.u, e.v, 1.0)?;
        pairs.push(alloc::vec![e.u, e.v]);
        triples.push(alloc::vec![e.u, e.v, r]);
    }
    pairs.extend(triples);
    Ok(ReductionCertificate {
        source: ReductionSource::VertexCover(g.clone()),
        instance: SthsInstance::new(builder.build(), pairs),
        identity: Identity::VertexCover {
            source_edges: g.edge_count(),
        },
        apex,
        weighted: false,
    })
}

/// Min Hitting Set → min basis hitting set: one rank-1 uniform matroid per
/// set over the ground set `U`.
pub fn reduce_hitting_set_to_matroids(hs: &HittingSetInstance) -> Result<Vec<UniformRank1Matroid>> {
    hs.sets
        .iter()
        .map(|s| UniformRank1Matroid::new(hs.universe.len(), s))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CertificateCheck {
    Holds {
        source_optimum: usize,
        gadget_optimum: f64,
    },
    Fails {
        source_optimum: usize,
        predicted: f64,
        gadget_optimum: f64,
    },
    Inconclusive,
}

impl CertificateCheck {
    pub fn holds(&self) -> bool {
        matches!(self, CertificateCheck::Holds { .. })
    }
}

/// Solves both sides exactly and compares the gadget optimum with the
/// identity's prediction.
pub fn check_certificate(
    cert: &ReductionCertificate,
    budget: SearchBudget,
) -> Result<CertificateCheck> {
    let source_optimum = match &cert.source {
        ReductionSource::HittingSet(hs) => hs.brute_force_optimum()?.len(),
        ReductionSource::VertexCover(g) => brute_force_vertex_cover(g)?,
    };
    let gadget = cert
        .instance
        .clone()
        .validate(ConnectivityPolicy::RequireConnected)?;
    let solution = gadget.solve_exact(cert.weighted, budget)?;
    let crate::instance::SolverReport::Exact(result) = &solution.report else {
        unreachable!("solve_exact reports an exact result")
    };
    if !result.is_optimal() {
        return Ok(CertificateCheck::Inconclusive);
    }
    let gadget_optimum = if cert.weighted {
        solution.weight
    } else {
        solution.edges.len() as f64
    };
    let predicted = cert.identity.predict(source_optimum);
    if (gadget_optimum - predicted).abs() <= 1e-9 * predicted.abs().max(1.0) {
        Ok(CertificateCheck::Holds {
            source_optimum,
            gadget_optimum,
        })
    } else {
        Ok(CertificateCheck::Fails {
            source_optimum,
            predicted,
            gadget_optimum,
        })
    }
}
