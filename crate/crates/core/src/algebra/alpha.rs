use std::collections::BTreeMap;

use super::AlgebraError;
use crate::graph::WeightedGraph;

/// A choice of `α^v ∈ s⁻¹(v)` with `w(α^v) = w(v)` for every regular vertex.
///
/// The default picks the smallest edge id among the maximal-weight edges
/// leaving `v`. That depends only on `s⁻¹(v)`, so the choice agrees on any
/// complete subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaChoice {
    by_vertex: BTreeMap<String, String>,
}

impl AlphaChoice {
    pub fn default_for(g: &WeightedGraph) -> AlphaChoice {
        let by_vertex = (0..g.vertex_count())
            .filter_map(|v| {
                let top = g.vertex_weight(v).ok()?;
                let alpha = g
                    .out_edges(v)
                    .iter()
                    .map(|&e| g.edge(e))
                    .filter(|e| e.weight == top)
                    .map(|e| e.id.as_str())
                    .min()?;
                Some((g.vertex_id(v).to_string(), alpha.to_string()))
            })
            .collect();
        AlphaChoice { by_vertex }
    }

    /// The default choice with some vertices overridden. Each override must
    /// name a maximal-weight edge leaving that vertex.
    pub fn with_overrides(
        g: &WeightedGraph,
        overrides: &BTreeMap<String, String>,
    ) -> Result<AlphaChoice, AlgebraError> {
        let mut choice = Self::default_for(g);
        for (v, e) in overrides {
            let vi = g
                .vertex(v)
                .ok_or_else(|| AlgebraError::UnknownVertex(v.clone()))?;
            let ei = g
                .edge_by_id(e)
                .ok_or_else(|| AlgebraError::UnknownEdge(e.clone()))?;
            let edge = g.edge(ei);
            let ok = edge.src == vi && g.vertex_weight(vi).is_ok_and(|w| w == edge.weight);
            if !ok {
                return Err(AlgebraError::BadAlpha {
                    vertex: v.clone(),
                    edge: e.clone(),
                });
            }
            choice.by_vertex.insert(v.clone(), e.clone());
        }
        Ok(choice)
    }

    pub fn get(&self, vertex: &str) -> Option<&str> {
        self.by_vertex.get(vertex).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.by_vertex.iter().map(|(v, e)| (v.as_str(), e.as_str()))
    }

    /// Checks that this choice is valid for `g`.
    pub(crate) fn check(&self, g: &WeightedGraph) -> Result<(), AlgebraError> {
        let fresh = Self::with_overrides(g, &self.by_vertex)?;
        if fresh.by_vertex.len() != self.by_vertex.len() {
            return Err(AlgebraError::IncompleteAlpha);
        }
        Ok(())
    }
}
