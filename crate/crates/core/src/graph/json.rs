use serde::{Deserialize, Serialize};

use super::{GraphError, WeightedGraph};

/// The on-disk graph format.
///
/// ```json
/// {"edges":[{"dst":"v1","id":"e","src":"v1","weight":2}],"vertices":["v1","v2"]}
/// ```
///
/// Fields are declared in key order so that serialization is canonical:
/// sorted keys, no whitespace, vertices and edges in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGraph {
    pub edges: Vec<RawEdge>,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEdge {
    pub dst: String,
    pub id: String,
    pub src: String,
    pub weight: u32,
}

impl RawGraph {
    pub fn validate(self) -> Result<WeightedGraph, GraphError> {
        WeightedGraph::new(
            self.vertices,
            self.edges
                .into_iter()
                .map(|e| (e.id, e.src, e.dst, e.weight)),
        )
    }
}

impl WeightedGraph {
    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            edges: self
                .edge_tuples()
                .map(|(id, src, dst, weight)| RawEdge {
                    dst,
                    id,
                    src,
                    weight,
                })
                .collect(),
            vertices: self.vertices().to_vec(),
        }
    }

    /// Parses and validates a graph from JSON text.
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let raw: RawGraph =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        raw.validate()
    }

    /// Canonical compact JSON. Two equal graphs always serialize to the same bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("graph serialization cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("graph serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_stable() {
        let text = r#"{"edges":[{"dst":"v1","id":"e","src":"v1","weight":2},{"dst":"v2","id":"f","src":"v1","weight":2}],"vertices":["v1","v2"]}"#;
        let g = WeightedGraph::from_json(text).unwrap();
        assert_eq!(g.to_json(), text);
    }

    #[test]
    fn whitespace_and_key_order_do_not_matter() {
        let text = r#"{ "vertices": ["b", "a"],
            "edges": [ {"id":"x","src":"b","dst":"a","weight":3} ] }"#;
        let g = WeightedGraph::from_json(text).unwrap();
        assert_eq!(
            g.to_json(),
            r#"{"edges":[{"dst":"a","id":"x","src":"b","weight":3}],"vertices":["b","a"]}"#
        );
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(
            WeightedGraph::from_json(r#"{"vertices":["a"],"edges":[],"extra":1}"#),
            Err(GraphError::Json(_))
        ));
        assert!(matches!(
            WeightedGraph::from_json(
                r#"{"vertices":["a"],"edges":[{"id":"e","src":"a","dst":"a","weight":-1}]}"#
            ),
            Err(GraphError::Json(_))
        ));
        assert_eq!(
            WeightedGraph::from_json(r#"{"vertices":[],"edges":[]}"#),
            Err(GraphError::Empty)
        );
    }
}
