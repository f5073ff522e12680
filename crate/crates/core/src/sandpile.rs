//! Sandpile graphs: plain directed graphs with a unique sink reachable from
//! every vertex. Giving each regular vertex the weight `|s⁻¹(v)|` makes such
//! a graph balanced, and the quotient by the set `S_E` of vertices that reach
//! no cycle is the graph of the associated weighted Leavitt path algebra.
//!
//! A vertex "reaches a cycle" when some (possibly empty) path leads from it
//! to a vertex lying on a cycle.

use thiserror::Error;

use crate::graph::{GraphError, VertexSet, WeightedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SandpileError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge `{edge}` has weight {weight}; sandpile input must be unweighted")]
    Weighted { edge: String, weight: u32 },
    #[error("not a sandpile graph: {0}")]
    NotSandpile(String),
    #[error("not conical: `{0}` reaches no cycle but has out-degree above 1")]
    NotConical(String),
    #[error("internal check failed: {0}; this is a bug")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandpileReport {
    pub is_sandpile: bool,
    /// The sink, when there is exactly one.
    pub sink: Option<String>,
    /// Vertices that reach no cycle.
    pub s_e: VertexSet,
    pub is_conical: bool,
    /// The input with every edge weighted by its source's out-degree.
    pub balanced: WeightedGraph,
}

/// Reweights every edge by the out-degree of its source.
pub fn balanced_weights(g: &WeightedGraph) -> WeightedGraph {
    let edges: Vec<_> = g
        .edge_tuples()
        .zip(g.edges())
        .map(|((id, s, d, _), e)| (id, s, d, g.out_edges(e.src).len() as u32))
        .collect();
    WeightedGraph::build(g.vertices().to_vec(), edges).expect("same shape as a valid graph")
}

fn on_cycle(g: &WeightedGraph) -> Vec<bool> {
    (0..g.vertex_count())
        .map(|v| {
            g.out_edges(v)
                .iter()
                .any(|&e| g.reachable_from(g.edge(e).dst)[v])
        })
        .collect()
}

pub fn analyze_sandpile(g: &WeightedGraph) -> Result<SandpileReport, SandpileError> {
    if let Some(e) = g.edges().iter().find(|e| e.weight != 1) {
        return Err(SandpileError::Weighted {
            edge: e.id.clone(),
            weight: e.weight,
        });
    }
    let n = g.vertex_count();
    let sinks: Vec<usize> = (0..n).filter(|&v| g.is_sink(v)).collect();
    let sink = match sinks.as_slice() {
        [s] => Some(*s),
        _ => None,
    };
    let is_sandpile = sink.is_some_and(|s| (0..n).all(|v| g.reachable_from(v)[s]));

    let cyc = on_cycle(g);
    let s_e: Vec<bool> = (0..n)
        .map(|v| {
            let reach = g.reachable_from(v);
            !(0..n).any(|u| reach[u] && cyc[u])
        })
        .collect();
    let is_conical = (0..n).all(|v| !s_e[v] || g.out_edges(v).len() <= 1);

    Ok(SandpileReport {
        is_sandpile,
        sink: sink.map(|s| g.vertex_id(s).to_string()),
        s_e: g.set_from_mask(&s_e),
        is_conical,
        balanced: balanced_weights(g),
    })
}

/// `E/S_E` with the balanced weights restricted. May be the empty graph,
/// when every vertex avoids cycles.
pub fn sandpile_algebra_graph(g: &WeightedGraph) -> Result<WeightedGraph, SandpileError> {
    let report = analyze_sandpile(g)?;
    if !report.is_sandpile {
        return Err(SandpileError::NotSandpile(
            "needs exactly one sink, reachable from every vertex".into(),
        ));
    }
    if !report.is_conical {
        let bad = report
            .s_e
            .iter()
            .find(|v| g.out_edges(g.vertex(v).expect("own vertex")).len() > 1)
            .expect("non-conical has a witness");
        return Err(SandpileError::NotConical(bad.to_string()));
    }
    let b = &report.balanced;
    if !b.is_hereditary(&report.s_e)? || !b.is_saturated(&report.s_e)? {
        return Err(SandpileError::Internal(format!(
            "{} is not hereditary and saturated",
            report.s_e
        )));
    }
    Ok(b.quotient_graph(&report.s_e)?)
}
