use std::collections::{BTreeMap, HashSet};

use super::{GraphError, VertexSet, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EliminationMode {
    /// Only requires the vertex to be a source.
    #[default]
    Plain,
    /// Additionally requires a non-sink source of weight 1, the case that
    /// preserves Morita equivalence.
    Strict,
}

impl WeightedGraph {
    /// `E/H`: drops the vertices of `h` and every edge ending in `h`, keeping
    /// the remaining weights.
    pub fn quotient_graph(&self, h: &VertexSet) -> Result<WeightedGraph, GraphError> {
        if !self.is_hereditary(h)? {
            return Err(GraphError::NotHereditary);
        }
        let mask = self.mask(h)?;
        let vertices = self
            .vertices()
            .iter()
            .enumerate()
            .filter(|(v, _)| !mask[*v])
            .map(|(_, id)| id.clone());
        let edges = self
            .edge_tuples()
            .zip(self.edges())
            .filter(|(_, e)| !mask[e.dst])
            .map(|(t, _)| t);
        WeightedGraph::build(vertices, edges)
    }

    /// `𝕄_n E`: every vertex gets a weight-1 head of length `n - 1`.
    pub fn matrix_extension(&self, n: u32) -> Result<WeightedGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroSize);
        }
        let lengths = self.vertices().iter().map(|v| (v.clone(), n)).collect();
        self.hair_extension(&lengths)
    }

    /// Hair extension: vertex `v` gets a head `v#h{k} → … → v#h1 → v` with
    /// `lengths[v] - 1` new vertices, joined by weight-1 edges
    /// `v#e{k}: v#h{k} → v#h{k-1}` (with `v#h0 = v`).
    pub fn hair_extension(
        &self,
        lengths: &BTreeMap<String, u32>,
    ) -> Result<WeightedGraph, GraphError> {
        for key in lengths.keys() {
            self.require_vertex(key)?;
        }
        let mut vertices = self.vertices().to_vec();
        let mut edges: Vec<_> = self.edge_tuples().collect();
        let mut new_vertices = HashSet::new();
        let existing_edges = self.edge_ids();
        for v in self.vertices() {
            let n = *lengths
                .get(v)
                .ok_or_else(|| GraphError::MissingLength(v.clone()))?;
            if n == 0 {
                return Err(GraphError::ZeroLength(v.clone()));
            }
            for k in 1..n {
                let head = format!("{v}#h{k}");
                let edge = format!("{v}#e{k}");
                if self.id_in_use(&head) || !new_vertices.insert(head.clone()) {
                    return Err(GraphError::IdCollision(head));
                }
                if existing_edges.contains(edge.as_str()) || self.vertex(&edge).is_some() {
                    return Err(GraphError::IdCollision(edge));
                }
                let below = if k == 1 {
                    v.clone()
                } else {
                    format!("{v}#h{}", k - 1)
                };
                vertices.push(head.clone());
                edges.push((edge, head, below, 1));
            }
        }
        WeightedGraph::new(vertices, edges)
    }

    /// `E_∖v`: deletes the source `v` and the edges it emits.
    pub fn source_elimination(
        &self,
        v: &str,
        mode: EliminationMode,
    ) -> Result<WeightedGraph, GraphError> {
        let vi = self.require_vertex(v)?;
        if !self.is_source(vi) {
            return Err(GraphError::NotSource(v.to_string()));
        }
        if mode == EliminationMode::Strict {
            let weight = self
                .vertex_weight(vi)
                .map_err(|_| GraphError::SourceIsSink(v.to_string()))?;
            if weight != 1 {
                return Err(GraphError::SourceWeight {
                    vertex: v.to_string(),
                    weight,
                });
            }
        }
        let vertices = self
            .vertices()
            .iter()
            .filter(|id| id.as_str() != v)
            .cloned();
        let edges = self
            .edge_tuples()
            .zip(self.edges())
            .filter(|(_, e)| e.src != vi)
            .map(|(t, _)| t);
        WeightedGraph::build(vertices, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::GraphBuilder;

    fn set(ids: &[&str]) -> VertexSet {
        ids.iter().copied().collect()
    }

    fn lengths(pairs: &[(&str, u32)]) -> BTreeMap<String, u32> {
        pairs.iter().map(|(v, n)| (v.to_string(), *n)).collect()
    }

    #[test]
    fn quotient_of_type_two_three() {
        let g = fixtures::type_two_three();
        let q = g.quotient_graph(&set(&["u"])).unwrap();
        let expected = GraphBuilder::new()
            .vertex("v")
            .edge("g1", "v", "v", 2)
            .edge("g2", "v", "v", 2)
            .edge("g3", "v", "v", 2)
            .build()
            .unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn quotient_edge_cases() {
        let g = fixtures::loop_and_exit();
        assert_eq!(g.quotient_graph(&set(&[])).unwrap(), g);
        let q = g.quotient_graph(&set(&["v2"])).unwrap();
        assert_eq!(q.vertices(), ["v1"]);
        assert_eq!(q.edge_count(), 1);
        assert_eq!(q.edge(0).id, "e");
        assert_eq!(q.edge(0).weight, 2);
        assert_eq!(
            g.quotient_graph(&set(&["v1"])),
            Err(GraphError::NotHereditary)
        );
        assert!(g.quotient_graph(&g.all_vertices()).unwrap().is_empty());
    }

    #[test]
    fn matrix_extension_adds_heads() {
        let g = fixtures::loop_with_exit();
        let m = g.matrix_extension(2).unwrap();
        let expected = GraphBuilder::new()
            .vertices(["v", "u", "v#h1", "u#h1"])
            .edge("e", "v", "v", 1)
            .edge("f", "v", "u", 1)
            .edge("v#e1", "v#h1", "v", 1)
            .edge("u#e1", "u#h1", "u", 1)
            .build()
            .unwrap();
        assert_eq!(m, expected);
        assert_eq!(g.matrix_extension(1).unwrap(), g);
        assert_eq!(g.matrix_extension(0), Err(GraphError::ZeroSize));

        let m3 = fixtures::loop_and_exit().matrix_extension(3).unwrap();
        assert_eq!(m3.vertex_count(), 6);
        assert_eq!(m3.edge_count(), 2 + 4);
        assert!(m3.edges()[2..].iter().all(|e| e.weight == 1));
    }

    #[test]
    fn hair_extension_shapes() {
        let g = fixtures::loop_with_exit_pair();
        let h = g.hair_extension(&lengths(&[("v1", 3), ("v2", 2)])).unwrap();
        let expected = GraphBuilder::new()
            .vertices(["v1", "v2", "v1#h1", "v1#h2", "v2#h1"])
            .edge("e", "v1", "v1", 1)
            .edge("f", "v1", "v2", 1)
            .edge("v1#e1", "v1#h1", "v1", 1)
            .edge("v1#e2", "v1#h2", "v1#h1", 1)
            .edge("v2#e1", "v2#h1", "v2", 1)
            .build()
            .unwrap();
        assert_eq!(h, expected);

        let l = fixtures::loop_and_exit();
        assert_eq!(
            l.hair_extension(&lengths(&[("v1", 1), ("v2", 1)])).unwrap(),
            l
        );

        let four = fixtures::four_vertex_weight_two();
        let plus = four
            .hair_extension(&lengths(&[("v1", 3), ("v2", 1), ("v3", 2), ("v4", 2)]))
            .unwrap();
        assert_eq!(plus.vertex_count(), 4 + 4);
    }

    #[test]
    fn hair_extension_errors() {
        let g = fixtures::loop_and_exit();
        assert_eq!(
            g.hair_extension(&lengths(&[("v1", 2)])),
            Err(GraphError::MissingLength("v2".into()))
        );
        assert_eq!(
            g.hair_extension(&lengths(&[("v1", 0), ("v2", 1)])),
            Err(GraphError::ZeroLength("v1".into()))
        );
        assert!(matches!(
            g.hair_extension(&lengths(&[("v1", 1), ("v2", 1), ("zz", 1)])),
            Err(GraphError::UnknownVertex(_))
        ));
        let clash = GraphBuilder::new().vertices(["a", "a#h1"]).build().unwrap();
        assert_eq!(
            clash.matrix_extension(2),
            Err(GraphError::IdCollision("a#h1".into()))
        );
    }

    #[test]
    fn source_elimination_cases() {
        let g = fixtures::loop_with_exit_pair();
        let h = g.hair_extension(&lengths(&[("v1", 3), ("v2", 2)])).unwrap();
        let cut = h
            .source_elimination("v1#h2", EliminationMode::Strict)
            .unwrap();
        assert_eq!(cut.vertex_count(), 4);
        assert!(cut.edge_by_id("v1#e2").is_none());

        let back = ["v1#h2", "v1#h1", "v2#h1"].iter().fold(h, |acc, v| {
            acc.source_elimination(v, EliminationMode::Strict).unwrap()
        });
        assert_eq!(back, g);

        let l = fixtures::loop_and_exit();
        assert_eq!(
            l.source_elimination("v1", EliminationMode::Plain),
            Err(GraphError::NotSource("v1".into()))
        );

        let lone = GraphBuilder::new().vertices(["a", "b"]).build().unwrap();
        assert!(lone.source_elimination("a", EliminationMode::Plain).is_ok());
        assert_eq!(
            lone.source_elimination("a", EliminationMode::Strict),
            Err(GraphError::SourceIsSink("a".into()))
        );
        let heavy = GraphBuilder::new()
            .vertices(["a", "b"])
            .edge("x", "a", "b", 2)
            .build()
            .unwrap();
        assert_eq!(
            heavy.source_elimination("a", EliminationMode::Strict),
            Err(GraphError::SourceWeight {
                vertex: "a".into(),
                weight: 2
            })
        );
    }
}
