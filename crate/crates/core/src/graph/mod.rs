//! Finite weighted graphs and the constructions built on them.
//!
//! A [`WeightedGraph`] is immutable once built. Vertex and edge order follow
//! the order in which they were declared; that order is what the JSON form
//! round-trips. Anything that needs a deterministic traversal independent of
//! declaration order iterates ids lexicographically (see [`VertexSet`]).

mod classify;
mod construct;
mod json;
mod sets;

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

pub use classify::VertexClassification;
pub use construct::EliminationMode;
pub use json::RawGraph;
pub use sets::{ClosureLayer, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("empty id")]
    EmptyId,
    #[error("edge `{edge}` refers to undeclared vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("edge `{0}` has weight 0; weights must be positive")]
    ZeroWeight(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("graph is not vertex weighted")]
    NotVertexWeighted,
    #[error("vertex set is not hereditary")]
    NotHereditary,
    #[error("vertex set is not saturated")]
    NotSaturated,
    #[error("closure of the empty set is not defined")]
    EmptySeed,
    #[error("vertex `{0}` is a sink and has no weight")]
    SinkWeight(String),
    #[error("generated id `{0}` collides with an existing id")]
    IdCollision(String),
    #[error("no head length given for vertex `{0}`")]
    MissingLength(String),
    #[error("head length for vertex `{0}` must be at least 1")]
    ZeroLength(String),
    #[error("matrix size must be at least 1")]
    ZeroSize,
    #[error("vertex `{0}` is not a source")]
    NotSource(String),
    #[error("vertex `{0}` is a sink")]
    SourceIsSink(String),
    #[error("vertex `{vertex}` has weight {weight}, expected 1")]
    SourceWeight { vertex: String, weight: u32 },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub dst: usize,
    pub weight: u32,
}

/// A finite directed multigraph with a positive weight on every edge.
#[derive(Clone)]
pub struct WeightedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl WeightedGraph {
    /// Builds a graph from vertex ids and `(id, src, dst, weight)` edges,
    /// rejecting anything that is not a well-formed nonempty weighted graph.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String, u32)>,
    {
        let graph = Self::build(vertices, edges)?;
        if graph.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        Ok(graph)
    }

    /// Same checks as [`WeightedGraph::new`] but allows the empty graph, which
    /// only arises as the result of quotienting by every vertex.
    pub(crate) fn build<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String, u32)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(GraphError::EmptyId);
            }
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }

        let mut resolved = Vec::new();
        let mut edge_index = HashMap::new();
        for (id, src, dst, weight) in edges {
            if id.is_empty() {
                return Err(GraphError::EmptyId);
            }
            if weight == 0 {
                return Err(GraphError::ZeroWeight(id));
            }
            let lookup = |v: &String| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| GraphError::DanglingEndpoint {
                        edge: id.clone(),
                        vertex: v.clone(),
                    })
            };
            let (s, d) = (lookup(&src)?, lookup(&dst)?);
            if edge_index.insert(id.clone(), resolved.len()).is_some() {
                return Err(GraphError::DuplicateEdge(id));
            }
            resolved.push(Edge {
                id,
                src: s,
                dst: d,
                weight,
            });
        }

        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in resolved.iter().enumerate() {
            out_edges[e.src].push(i);
            in_edges[e.dst].push(i);
        }

        Ok(WeightedGraph {
            vertices,
            edges: resolved,
            vertex_index,
            edge_index,
            out_edges,
            in_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub(crate) fn require_vertex(&self, id: &str) -> Result<usize, GraphError> {
        self.vertex(id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    /// Edges leaving `v`, in declaration order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// Edges arriving at `v`, in declaration order.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_edges[v].is_empty()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_edges[v].is_empty()
    }

    pub fn is_regular(&self, v: usize) -> bool {
        !self.is_sink(v)
    }

    /// `w(v)`, the largest weight of an edge leaving `v`. Sinks have no weight.
    pub fn vertex_weight(&self, v: usize) -> Result<u32, GraphError> {
        self.out_edges[v]
            .iter()
            .map(|&e| self.edges[e].weight)
            .max()
            .ok_or_else(|| GraphError::SinkWeight(self.vertices[v].clone()))
    }

    /// Vertex indices sorted by id.
    pub fn vertices_by_id(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        order
    }

    pub(crate) fn edge_tuples(&self) -> impl Iterator<Item = (String, String, String, u32)> + '_ {
        self.edges.iter().map(|e| {
            (
                e.id.clone(),
                self.vertices[e.src].clone(),
                self.vertices[e.dst].clone(),
                e.weight,
            )
        })
    }

    pub(crate) fn id_in_use(&self, id: &str) -> bool {
        self.vertex_index.contains_key(id) || self.edge_index.contains_key(id)
    }

    /// Converts a set of vertex ids into a membership mask.
    pub(crate) fn mask(&self, set: &VertexSet) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.vertices.len()];
        for id in set.iter() {
            mask[self.require_vertex(id)?] = true;
        }
        Ok(mask)
    }

    pub(crate) fn set_from_mask(&self, mask: &[bool]) -> VertexSet {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| self.vertices[v].clone())
            .collect()
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices.iter().cloned().collect()
    }

    /// Vertex ids reachable from `start` by directed paths of length ≥ 0.
    pub(crate) fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.out_edges[v] {
                let d = self.edges[e].dst;
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen
    }

    pub(crate) fn edge_ids(&self) -> HashSet<&str> {
        self.edges.iter().map(|e| e.id.as_str()).collect()
    }
}

impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for WeightedGraph {}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("vertices", &self.vertices)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|e| {
                        format!(
                            "{}: {} -> {} (w{})",
                            e.id, self.vertices[e.src], self.vertices[e.dst], e.weight
                        )
                    })
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Small builder for graphs written inline, mostly in tests and examples.
///
/// ```
/// use wlpa::graph::GraphBuilder;
/// let g = GraphBuilder::new()
///     .vertices(["v1", "v2"])
///     .edge("e", "v1", "v1", 2)
///     .edge("f", "v1", "v2", 2)
///     .build()
///     .unwrap();
/// assert_eq!(g.edge_count(), 2);
/// ```
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, String, String, u32)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: impl Into<String>) -> Self {
        self.vertices.push(id.into());
        self
    }

    pub fn vertices<I>(mut self, ids: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        self.vertices.extend(ids.into_iter().map(Into::into));
        self
    }

    pub fn edge(
        mut self,
        id: impl Into<String>,
        src: impl Into<String>,
        dst: impl Into<String>,
        weight: u32,
    ) -> Self {
        self.edges.push((id.into(), src.into(), dst.into(), weight));
        self
    }

    pub fn build(self) -> Result<WeightedGraph, GraphError> {
        WeightedGraph::new(self.vertices, self.edges)
    }
}
