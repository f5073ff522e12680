//! Driving the command-line interface from Rust, with captured output.
//!
//!     cargo run --example cli_in_process

use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/type_two_three.json");
    let file = data.to_str().expect("utf-8 path");
    for args in [
        vec!["wlpa", "classify", file],
        vec!["wlpa", "type", file, "--format", "json"],
        vec!["wlpa", "reduce", file, "--expr", "g1[1] + + g2[2]"],
    ] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = wlpa::cli::run(&args, &mut out, &mut err);
        println!(
            "$ {}\n{}{}exit {code}\n",
            args[1..].join(" "),
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
    }
}
