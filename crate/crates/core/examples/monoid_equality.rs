//! The graph monoid: bounded equality search with a replayable witness, the
//! module type, and full idempotents.
//!
//!     cargo run --example monoid_equality

use wlpa::fixtures;
use wlpa::monoid::{GraphMonoid, SearchLimits, DEFAULT_DEPTH};
use wlpa::VertexSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixtures::loop_and_exit();
    let m = GraphMonoid::new(&g)?;
    for r in m.relations() {
        println!(
            "relation at {}: {} = {}",
            g.vertex_id(r.vertex),
            m.format(&r.lhs),
            m.format(&r.rhs)
        );
    }

    let (x, y) = (m.parse("3*v1")?, m.parse("2*v1 + v2")?);
    let cert = m.equal(&x, &y, DEFAULT_DEPTH)?;
    println!(
        "{} vs {}: {:?} after {} states",
        m.format(&x),
        m.format(&y),
        cert.verdict,
        cert.explored
    );
    for step in &cert.witness {
        println!(
            "  at {}, apply {} {}",
            m.format(&step.at),
            g.vertex_id(step.vertex),
            step.direction.as_str()
        );
    }
    assert!(m.replay(&x, &y, &cert.witness));

    // Non-equality is never claimed: this one is simply not found.
    let cert = m.equal(&m.parse("v2")?, &m.parse("2*v2")?, 4)?;
    println!(
        "v2 vs 2*v2: {:?} (exhausted: {})",
        cert.verdict, cert.exhausted
    );

    let t = GraphMonoid::new(&fixtures::type_two_three())?;
    if let Some(ty) = t.algebra_type(4, 8, SearchLimits::default())? {
        println!("module type ({}, {})", ty.m, ty.n);
    }

    let w: VertexSet = ["v1".to_string()].into_iter().collect();
    println!(
        "v1 is a full idempotent: {}",
        m.is_full_vertex_idempotent(&w)?
    );
    Ok(())
}
