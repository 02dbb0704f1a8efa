//! JSON file formats.
//!
//! Instance (`version` optional on input, written as 1):
//!
//! ```json
//! {"vertices": ["a", "b", "c"],
//!  "edges": [["a", "b"], ["b", "c", 2.5]],
//!  "subsets": [["a", "b", "c"], ["a", "b"]]}
//! ```
//!
//! Edges without a weight weigh 1. Solutions carry `edges` (canonical label
//! pairs), `weight`, `trees` (one edge list per subset) and `stats`. Writers
//! emit sorted keys and edges in canonical order, so output bytes depend only
//! on the input.

use std::fs;
use std::path::Path;

use hitting_core::exact::ExactStatus;
use hitting_core::instance::SolverReport;
use hitting_core::reductions::HittingSetInstance;
use hitting_core::{Graph, Solution, SthsInstance, ValidatedInstance};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeSpec {
    Weighted(String, String, f64),
    Unit(String, String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
    #[serde(default)]
    pub subsets: Vec<Vec<String>>,
}

impl InstanceFile {
    pub fn graph(&self) -> Result<Graph> {
        let mut builder = Graph::builder(self.vertices.iter().cloned())?;
        for edge in &self.edges {
            let (u, v, w) = match edge {
                EdgeSpec::Weighted(u, v, w) => (u, v, *w),
                EdgeSpec::Unit(u, v) => (u, v, 1.0),
            };
            builder.add_edge_by_label(u, v, w)?;
        }
        Ok(builder.build())
    }

    pub fn to_instance(&self) -> Result<SthsInstance> {
        Ok(SthsInstance::from_labels(self.graph()?, &self.subsets)?)
    }

    pub fn from_instance(instance: &SthsInstance) -> Self {
        let graph = &instance.graph;
        let edges = graph
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = (graph.label(e.u).to_owned(), graph.label(e.v).to_owned());
                if e.weight == 1.0 {
                    EdgeSpec::Unit(u, v)
                } else {
                    EdgeSpec::Weighted(u, v, e.weight)
                }
            })
            .collect();
        let subsets = instance
            .subsets
            .iter()
            .map(|s| s.iter().map(|&v| graph.label(v).to_owned()).collect())
            .collect();
        InstanceFile {
            version: Some(FORMAT_VERSION),
            vertices: graph.vertices().to_vec(),
            edges,
            subsets,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HittingSetFile {
    pub universe: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

impl HittingSetFile {
    pub fn to_instance(&self) -> Result<HittingSetInstance> {
        Ok(HittingSetInstance::from_labels(
            self.universe.clone(),
            &self.sets,
        )?)
    }
}

/// Only the `edges` of a solution file are read back.
#[derive(Debug, Clone, Deserialize)]
pub struct SolutionEdges {
    pub edges: Vec<(String, String)>,
}

impl SolutionEdges {
    /// Graph edge indices; a pair that is not an edge of `graph` is an error.
    pub fn resolve(&self, graph: &Graph) -> Result<Vec<usize>> {
        self.edges
            .iter()
            .map(|(u, v)| {
                let iu = graph.vertex_index(u);
                let iv = graph.vertex_index(v);
                iu.zip(iv)
                    .and_then(|(a, b)| graph.edge_index(a, b))
                    .ok_or_else(|| {
                        Error::Input(format!(
                            "solution edge {{{u}, {v}}} is not an edge of the instance"
                        ))
                    })
            })
            .collect()
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_owned(),
        source,
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_stable_json<T: Serialize>(value: &T) -> String {
    // serde_json's Value map is a BTreeMap, which sorts keys
    let value = serde_json::to_value(value).expect("serializable");
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

pub fn edge_pair(graph: &Graph, e: usize) -> Value {
    let (u, v) = graph.edge_labels(e);
    json!([u, v])
}

pub fn solution_json(validated: &ValidatedInstance, solution: &Solution) -> Value {
    let graph = validated.graph();
    let ground = validated.ground_edges();
    let edges: Vec<Value> = solution
        .edges
        .iter()
        .map(|&e| edge_pair(graph, e))
        .collect();
    let trees: Vec<Value> = solution
        .trees
        .iter()
        .map(|t| Value::from(t.iter().map(|&e| edge_pair(graph, e)).collect::<Vec<_>>()))
        .collect();
    let r0 = validated.total_rank();
    let harmonic_bound = hitting_core::greedy::harmonic(r0);
    let stats = match &solution.report {
        SolverReport::Greedy(report) => json!({
            "solver": "greedy",
            "R0": report.r0,
            "harmonic_bound": report.harmonic_bound,
            "guarantee": report.guarantee(),
            "weighted": report.weighted,
            "steps": report.steps.iter().map(|s| json!({
                "edge": edge_pair(graph, ground[s.element]),
                "profit": s.profit,
                "residual": s.residual,
            })).collect::<Vec<_>>(),
        }),
        SolverReport::Exact(result) => json!({
            "solver": "exact",
            "R0": r0,
            "harmonic_bound": harmonic_bound,
            "optimal": result.is_optimal(),
            "lower_bound": match result.status {
                ExactStatus::Optimal => None,
                ExactStatus::Inconclusive { lower_bound } => Some(lower_bound),
            },
            "nodes_explored": result.nodes_explored,
            "steps": Vec::<Value>::new(),
        }),
    };
    json!({
        "version": FORMAT_VERSION,
        "edges": edges,
        "size": solution.edges.len(),
        "weight": solution.weight,
        "trees": trees,
        "stats": stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weighted_and_unit_edges() {
        let text = r#"{"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["c", "b", 2.5]], "subsets": [["a", "b", "c"]]}"#;
        let file: InstanceFile = serde_json::from_str(text).unwrap();
        let inst = file.to_instance().unwrap();
        assert_eq!(inst.graph.edges()[1].weight, 2.5);
        assert_eq!(inst.graph.edge_labels(1), ("b", "c"));
        let back = InstanceFile::from_instance(&inst);
        assert_eq!(
            back.edges[1],
            EdgeSpec::Weighted("b".into(), "c".into(), 2.5)
        );
        assert_eq!(back.version, Some(1));
    }

    #[test]
    fn unknown_labels_and_fields_are_rejected() {
        let bad: InstanceFile =
            serde_json::from_str(r#"{"vertices": ["a"], "edges": [["a", "z"]], "subsets": []}"#)
                .unwrap();
        assert!(bad.to_instance().is_err());
        assert!(serde_json::from_str::<InstanceFile>(r#"{"vertices": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn stable_json_sorts_keys() {
        let text = to_stable_json(&json!({"b": 1, "a": [2, 1]}));
        assert!(text.find("\"a\"").unwrap() < text.find("\"b\"").unwrap());
        assert!(text.ends_with('\n'));
    }
}
