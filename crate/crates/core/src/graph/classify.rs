use std::collections::BTreeMap;

use super::{GraphError, VertexSet, WeightedGraph};

/// Regular/sink partition of the vertices, plus sources and the weight
/// `w(v) = max w(e)` over edges leaving each regular vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    pub regular: VertexSet,
    pub sinks: VertexSet,
    pub sources: VertexSet,
    vertex_weight: BTreeMap<String, u32>,
}

impl VertexClassification {
    /// Weight of a regular vertex. Sinks have none; asking for one is an error.
    pub fn vertex_weight(&self, v: &str) -> Result<u32, GraphError> {
        match self.vertex_weight.get(v) {
            Some(&w) => Ok(w),
            None if self.sinks.contains(v) => Err(GraphError::SinkWeight(v.to_string())),
            None => Err(GraphError::UnknownVertex(v.to_string())),
        }
    }

    pub fn weights(&self) -> &BTreeMap<String, u32> {
        &self.vertex_weight
    }
}

impl WeightedGraph {
    pub fn classify(&self) -> VertexClassification {
        let mut regular = VertexSet::new();
        let mut sinks = VertexSet::new();
        let mut sources = VertexSet::new();
        let mut vertex_weight = BTreeMap::new();
        for v in 0..self.vertex_count() {
            let id = self.vertex_id(v).to_string();
            if self.is_source(v) {
                sources.insert(id.clone());
            }
            match self.vertex_weight(v) {
                Ok(w) => {
                    vertex_weight.insert(id.clone(), w);
                    regular.insert(id);
                }
                Err(_) => {
                    sinks.insert(id);
                }
            }
        }
        VertexClassification {
            regular,
            sinks,
            sources,
            vertex_weight,
        }
    }

    /// Every edge leaving a common vertex carries the same weight.
    pub fn is_vertex_weighted(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let mut weights = self.out_edges(v).iter().map(|&e| self.edge(e).weight);
            match weights.next() {
                Some(first) => weights.all(|w| w == first),
                None => true,
            }
        })
    }

    /// Vertex weighted, and each regular vertex has weight equal to its out-degree.
    pub fn is_balanced(&self) -> bool {
        self.is_vertex_weighted()
            && (0..self.vertex_count()).all(|v| match self.vertex_weight(v) {
                Ok(w) => w as usize == self.out_edges(v).len(),
                Err(_) => true,
            })
    }
}
