//! Closures, quotients, and the extensions that preserve the algebra up to
//! Morita equivalence.
//!
//!     cargo run --example graph_constructions

use std::collections::BTreeMap;

use wlpa::fixtures;
use wlpa::graph::EliminationMode;
use wlpa::VertexSet;

fn set(ids: &[&str]) -> VertexSet {
    ids.iter().map(|s| s.to_string()).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::four_vertex_weight_two();
    let c = g.classify();
    println!(
        "regular {}, sinks {}, sources {}",
        c.regular, c.sinks, c.sources
    );

    for (round, layer) in g.closure_layers(&set(&["v1"]))?.iter().enumerate() {
        println!(
            "closure round {round}: hereditary {:?}, saturated {:?}",
            layer.hereditary, layer.saturated
        );
    }
    println!(
        "closure of {{v1}}: {}",
        g.hereditary_saturated_closure(&set(&["v1"]))?
    );

    let t = fixtures::type_two_three();
    println!(
        "quotient by {{u}}:\n{}",
        t.quotient_graph(&set(&["u"]))?.to_json_pretty()
    );

    let base = fixtures::loop_with_exit();
    let m3 = base.matrix_extension(3)?;
    println!(
        "matrix extension of size 3 has {} vertices",
        m3.vertex_count()
    );

    let lengths: BTreeMap<String, u32> = [("v".to_string(), 2), ("u".to_string(), 1)].into();
    let hair = base.hair_extension(&lengths)?;
    let back = hair.source_elimination("v#h1", EliminationMode::Strict)?;
    println!(
        "hair extension then source elimination is the identity: {}",
        back == base
    );
    Ok(())
}
