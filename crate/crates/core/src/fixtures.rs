//! Small named graphs that come up again and again: in tests, in the
//! runnable examples, and as the canonical JSON files under `data/`.

use crate::graph::{GraphBuilder, WeightedGraph};

fn done(b: GraphBuilder) -> WeightedGraph {
    b.build().expect("fixture graphs are well formed")
}

/// `v1` with a loop `e` and an edge `f` to the sink `v2`, both of weight 2.
pub fn loop_and_exit() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e", "v1", "v1", 2)
            .edge("f", "v1", "v2", 2),
    )
}

/// Four vertices, every edge of weight 2:
/// `v1 ⟲e, v1 -f-> v2, v2 ⟲g, v2 -h-> v3, v4 -x-> v1, v4 -y-> v2`.
pub fn four_vertex_weight_two() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertices(["v1", "v2", "v3", "v4"])
            .edge("e", "v1", "v1", 2)
            .edge("f", "v1", "v2", 2)
            .edge("g", "v2", "v2", 2)
            .edge("h", "v2", "v3", 2)
            .edge("x", "v4", "v1", 2)
            .edge("y", "v4", "v2", 2),
    )
}

/// `v` with three loops and one exit to the sink `u`, all of weight 2.
/// Its module type is (2, 3).
pub fn type_two_three() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertices(["v", "u"])
            .edge("g1", "v", "v", 2)
            .edge("g2", "v", "v", 2)
            .edge("g3", "v", "v", 2)
            .edge("h", "v", "u", 2),
    )
}

/// Unweighted `v ⟲e` with `f: v → u`.
pub fn loop_with_exit() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertices(["v", "u"])
            .edge("e", "v", "v", 1)
            .edge("f", "v", "u", 1),
    )
}

/// Unweighted `v1 ⟲e` with `f: v1 → v2`.
pub fn loop_with_exit_pair() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertices(["v1", "v2"])
            .edge("e", "v1", "v1", 1)
            .edge("f", "v1", "v2", 1),
    )
}

/// `u <-e- v -f-> x` with `w(e) = 1`, `w(f) = 2`; not vertex weighted.
pub fn mixed_weight_fork() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertices(["u", "v", "x"])
            .edge("e", "v", "u", 1)
            .edge("f", "v", "x", 2),
    )
}

/// One vertex with two weight-1 loops, so that `v = 2v` in the monoid.
pub fn leavitt_one_two() -> WeightedGraph {
    done(
        GraphBuilder::new()
            .vertex("v")
            .edge("a", "v", "v", 1)
            .edge("b", "v", "v", 1),
    )
}

/// One vertex, no edges.
pub fn single_sink() -> WeightedGraph {
    done(GraphBuilder::new().vertex("v"))
}

/// Every named fixture, with a short label.
pub fn all() -> Vec<(&'static str, WeightedGraph)> {
    vec![
        ("loop_and_exit", loop_and_exit()),
        ("four_vertex_weight_two", four_vertex_weight_two()),
        ("type_two_three", type_two_three()),
        ("loop_with_exit", loop_with_exit()),
        ("loop_with_exit_pair", loop_with_exit_pair()),
        ("mixed_weight_fork", mixed_weight_fork()),
        ("leavitt_one_two", leavitt_one_two()),
        ("single_sink", single_sink()),
    ]
}
