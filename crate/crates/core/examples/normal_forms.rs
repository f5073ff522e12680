//! Parsing, multiplying, and reducing elements of a weighted Leavitt path
//! algebra to normal form.
//!
//!     cargo run --example normal_forms

use wlpa::{fixtures, Algebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // v1 carries a weight-2 loop e and a weight-2 edge f to the sink v2.
    let a = Algebra::new(&fixtures::loop_and_exit())?;

    for input in [
        "e[1]e[1]* + e[2]e[2]*",
        "e[1]*e[1] + f[1]*f[1]",
        "e[1]*e[2]",
        "3/2*f[2]*f[2]",
    ] {
        println!("{input:>24}  =  {}", a.format(&a.parse(input)?));
    }

    let x = a.parse("e[1] + 2*f[2]")?;
    let y = a.parse("e[1]* - v1")?;
    let xy = a.multiply(&x, &y)?;
    println!(
        "({}) * ({}) = {}",
        a.format(&x),
        a.format(&y),
        a.format(&xy)
    );
    println!("involution: {}", a.format(&a.involution(&xy)?));

    let residuals = a.relation_residuals()?;
    let nonzero = residuals.iter().filter(|r| !r.value.is_zero()).count();
    println!(
        "{} defining relations, {nonzero} nonzero residuals",
        residuals.len()
    );

    let basis = a.enumerate_normal_paths(2);
    println!("{} normal paths of length at most 2", basis.len());
    Ok(())
}
