//! Sandpile graphs: the cycle-avoiding vertices, balanced weights, and the
//! graph of the associated weighted Leavitt path algebra.
//!
//!     cargo run --example sandpile_algebra

use wlpa::sandpile::{analyze_sandpile, sandpile_algebra_graph};
use wlpa::GraphBuilder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A two-cycle with an exit to the sink.
    let g = GraphBuilder::new()
        .vertices(["a", "b", "s"])
        .edge("ab", "a", "b", 1)
        .edge("ba", "b", "a", 1)
        .edge("bs", "b", "s", 1)
        .build()?;
    let r = analyze_sandpile(&g)?;
    println!(
        "sink {:?}, cycle-avoiding {}, conical {}",
        r.sink, r.s_e, r.is_conical
    );
    println!("balanced weights:\n{}", r.balanced.to_json_pretty());
    let q = sandpile_algebra_graph(&g)?;
    println!(
        "algebra graph (vertex weighted: {}):\n{}",
        q.is_vertex_weighted(),
        q.to_json_pretty()
    );
    Ok(())
}
