use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// Undirected edge between vertex indices `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Simple weighted graph with labelled vertices. Edges are stored in
/// canonical `(u, v)` order, which fixes the edge indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    vertices: Vec<String>,
    by_label: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    by_ends: BTreeMap<(usize, usize), usize>,
}

impl Graph {
    pub fn builder<I, S>(vertices: I) -> Result<GraphBuilder>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        GraphBuilder::new(vertices)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.by_ends.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn edge_labels(&self, e: usize) -> (&str, &str) {
        let edge = &self.edges[e];
        (&self.vertices[edge.u], &self.vertices[edge.v])
    }

    pub fn weight_of<I: IntoIterator<Item = usize>>(&self, edges: I) -> f64 {
        edges.into_iter().map(|e| self.edges[e].weight).sum()
    }

    /// True if every edge has weight exactly 1.
    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }
}

#[derive(Debug, Clone)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    by_label: BTreeMap<String, usize>,
    edges: BTreeMap<(usize, usize), f64>,
}

impl GraphBuilder {
    pub fn new<I, S>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut builder = GraphBuilder {
            vertices: Vec::new(),
            by_label: BTreeMap::new(),
            edges: BTreeMap::new(),
        };
        for label in vertices {
            builder.add_vertex(label)?;
        }
        Ok(builder)
    }

    pub fn add_vertex<S: Into<String>>(&mut self, label: S) -> Result<usize> {
        let label = label.into();
        if self.by_label.contains_key(&label) {
            return Err(Error::DuplicateVertex(label));
        }
        let id = self.vertices.len();
        self.by_label.insert(label.clone(), id);
        self.vertices.push(label);
        Ok(id)
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    /// Adds `{a, b}`. A parallel edge keeps the cheaper weight.
    pub fn add_edge(&mut self, a: usize, b: usize, weight: f64) -> Result<&mut Self> {
        let n = self.vertices.len();
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange(x));
            }
        }
        if a == b {
            return Err(Error::SelfLoop(self.vertices[a].clone()));
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::EdgeWeight {
                u: self.vertices[a].clone(),
                v: self.vertices[b].clone(),
                weight,
            });
        }
        let slot = self.edges.entry((a.min(b), a.max(b))).or_insert(weight);
        *slot = slot.min(weight);
        Ok(self)
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str, weight: f64) -> Result<&mut Self> {
        let ia = self
            .vertex_index(a)
            .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
        let ib = self
            .vertex_index(b)
            .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
        self.add_edge(ia, ib, weight)
    }

    pub fn build(self) -> Graph {
        let edges: Vec<Edge> = self
            .edges
            .into_iter()
            .map(|((u, v), weight)| Edge { u, v, weight })
            .collect();
        let by_ends = edges
            .iter()
            .enumerate()
            .map(|(i, e)| ((e.u, e.v), i))
            .collect();
        Graph {
            vertices: self.vertices,
            by_label: self.by_label,
            edges,
            by_ends,
        }
    }
}
