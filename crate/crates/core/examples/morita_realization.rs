//! Decomposing a power of a projective module into vertex modules, and the
//! hair-extension graphs realizing endomorphism and corner algebras.
//!
//!     cargo run --example morita_realization

use wlpa::fixtures;
use wlpa::morita::{self, ProjectivePresentation};
use wlpa::VertexSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::four_vertex_weight_two();
    let p = ProjectivePresentation::parse(&g, "v1=1")?;
    let d = morita::decompose_progenerator(&g, &p)?;
    println!("{}·[v1] = {:?}", d.n, d.multiplicities);
    for s in &d.steps {
        println!("  {} ({:?}): scale by {}", s.vertex, s.growth, s.factor);
    }
    println!("witness has {} relation applications", d.witness.len());
    println!(
        "independently verified: {}",
        morita::verify_decomposition(&g, &p, &d.n, &d.multiplicities, 8)?
    );

    let r = morita::endomorphism_realization(&g, &p)?;
    println!(
        "End(v1L) is realized with hair lengths {:?}, {} vertices",
        r.hair_lengths,
        r.graph.vertex_count()
    );

    let e = fixtures::loop_and_exit();
    let w: VertexSet = ["v1".to_string()].into_iter().collect();
    let corner = morita::corner_realization(&e, &w)?;
    println!(
        "corner of v1: n = {}, same graph: {}",
        corner.n,
        corner.graph == e
    );

    let big = morita::morita_realization_pipeline(&e, 2, &w)?;
    println!(
        "2x2 matrices then the corner of v1: {} vertices",
        big.graph.vertex_count()
    );
    Ok(())
}
