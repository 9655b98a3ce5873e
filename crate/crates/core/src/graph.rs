//! Undirected multigraphs with labelled edges.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

/// Parallel edges and loops are permitted; edge labels are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new<S: AsRef<str>>(vertices: Vec<String>, edges: &[(S, S, S)]) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut labels = HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (u, v, label) in edges {
            let (u, v, label) = (u.as_ref(), v.as_ref(), label.as_ref());
            if !labels.insert(label.to_string()) {
                return Err(Error::DuplicateLabel(label.into()));
            }
            let ui = vertices
                .iter()
                .position(|x| x == u)
                .ok_or_else(|| Error::UnknownLabel(u.into()))?;
            let vi = vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::UnknownLabel(v.into()))?;
            out.push(Edge {
                u: ui,
                v: vi,
                label: label.into(),
            });
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    /// `K_n` on vertices `"0".."n-1"`; `label(u, v)` names the edge `u < v`.
    pub fn complete(n: usize, mut label: impl FnMut(usize, usize) -> String) -> Self {
        let vertices = (0..n).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge {
                    u,
                    v,
                    label: label(u, v),
                });
            }
        }
        Graph { vertices, edges }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, label: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.label == label)
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    /// Same graph with edges renamed through `rename`.
    pub fn relabeled(&self, mut rename: impl FnMut(&Edge) -> String) -> Result<Self> {
        let edges: Vec<(String, String, String)> = self
            .edges
            .iter()
            .map(|e| {
                (
                    self.vertices[e.u].clone(),
                    self.vertices[e.v].clone(),
                    rename(e),
                )
            })
            .collect();
        Graph::new(self.vertices.clone(), &edges)
    }
}

/// JSON shape: `{"vertices": n | [names], "edges": [["u", "v", "label"], ...]}`.
/// With a count, vertices are named `"0".."n-1"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: VertexSpec,
    pub edges: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexSpec {
    Count(usize),
    Names(Vec<String>),
}

impl VertexSpec {
    pub fn names(&self) -> Vec<String> {
        match self {
            VertexSpec::Count(n) => (0..*n).map(|i| i.to_string()).collect(),
            VertexSpec::Names(v) => v.clone(),
        }
    }
}

impl TryFrom<&GraphSpec> for Graph {
    type Error = Error;
    fn try_from(spec: &GraphSpec) -> Result<Self> {
        Graph::new(spec.vertices.names(), &spec.edges)
    }
}

impl From<&Graph> for GraphSpec {
    fn from(g: &Graph) -> Self {
        GraphSpec {
            vertices: VertexSpec::Names(g.vertices.clone()),
            edges: g
                .edges
                .iter()
                .map(|e| (g.vertices[e.u].clone(), g.vertices[e.v].clone(), e.label.clone()))
                .collect(),
        }
    }
}

/// A graph whose edges carry signs `+1` or `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    signs: Vec<i8>,
}

impl SignedGraph {
    /// `signs[i]` belongs to the `i`-th edge of `graph`.
    pub fn new(graph: Graph, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != graph.edges().len() {
            return Err(Error::InvalidArgument("one sign per edge is required".into()));
        }
        if let Some(s) = signs.iter().find(|s| s.abs() != 1) {
            return Err(Error::InvalidArgument(format!("edge sign {s} is not +1 or -1")));
        }
        Ok(SignedGraph { graph, signs })
    }

    pub fn all_positive(graph: Graph) -> Self {
        let signs = vec![1; graph.edges().len()];
        SignedGraph { graph, signs }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, label: &str) -> Option<i8> {
        self.graph
            .edges()
            .iter()
            .position(|e| e.label == label)
            .map(|i| self.signs[i])
    }

    /// Flips the sign of every edge with exactly one end at `v`.
    pub fn resigned_at(&self, v: usize) -> Self {
        let signs = self
            .graph
            .edges()
            .iter()
            .zip(&self.signs)
            .map(|(e, &s)| if (e.u == v) != (e.v == v) { -s } else { s })
            .collect();
        SignedGraph {
            graph: self.graph.clone(),
            signs,
        }
    }
}

/// JSON shape: `{"vertices": [...], "edges": [["u", "v", "label", 1 | -1], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGraphSpec {
    pub vertices: VertexSpec,
    pub edges: Vec<(String, String, String, i8)>,
}

impl TryFrom<&SignedGraphSpec> for SignedGraph {
    type Error = Error;
    fn try_from(spec: &SignedGraphSpec) -> Result<Self> {
        let edges: Vec<(&str, &str, &str)> = spec
            .edges
            .iter()
            .map(|(u, v, l, _)| (u.as_str(), v.as_str(), l.as_str()))
            .collect();
        let graph = Graph::new(spec.vertices.names(), &edges)?;
        SignedGraph::new(graph, spec.edges.iter().map(|e| e.3).collect())
    }
}

impl From<&SignedGraph> for SignedGraphSpec {
    fn from(g: &SignedGraph) -> Self {
        let v = g.graph.vertices();
        SignedGraphSpec {
            vertices: VertexSpec::Names(v.to_vec()),
            edges: g
                .graph
                .edges()
                .iter()
                .zip(&g.signs)
                .map(|(e, &s)| (v[e.u].clone(), v[e.v].clone(), e.label.clone(), s))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        let k5 = Graph::complete(5, |u, v| format!("e{u}{v}"));
        assert_eq!(k5.vertices().len(), 5);
        assert_eq!(k5.edges().len(), 10);
    }

    #[test]
    fn rejects_bad_edges() {
        let v = vec!["x".to_string(), "y".to_string()];
        assert!(Graph::new(v.clone(), &[("x", "z", "e")]).is_err());
        assert!(Graph::new(v.clone(), &[("x", "y", "e"), ("y", "x", "e")]).is_err());
        let loops = Graph::new(v, &[("x", "x", "l"), ("x", "y", "p"), ("x", "y", "q")]).unwrap();
        assert_eq!(loops.edges().len(), 3);
    }

    #[test]
    fn signed_json_round_trip() {
        let json = r#"{"vertices": ["p", "q"], "edges": [["p", "q", "e", -1], ["p", "p", "l", 1]]}"#;
        let spec: SignedGraphSpec = serde_json::from_str(json).unwrap();
        let g = SignedGraph::try_from(&spec).unwrap();
        assert_eq!(g.sign("e"), Some(-1));
        assert_eq!(SignedGraphSpec::from(&g), spec);
        assert_eq!(g.resigned_at(0).signs(), &[1, 1]);
        let bad = r#"{"vertices": 2, "edges": [["0", "1", "e", 2]]}"#;
        let spec: SignedGraphSpec = serde_json::from_str(bad).unwrap();
        assert!(SignedGraph::try_from(&spec).is_err());
    }
}
