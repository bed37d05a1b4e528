//! Prints a witness graph for every pair of the closed form on `n` vertices.
//!
//! cargo run --release -p bettisize --example pdreg_witnesses -- 6

use bettisize::{pdreg_closed_form, realize, Field};

fn main() -> bettisize::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    for pair in pdreg_closed_form(n)? {
        let cert = realize(n, pair.p, pair.r, false, Field::Rationals)?;
        println!(
            "{pair:>8}  {:<10} {}",
            cert.graph.to_graph6(),
            cert.construction_trace.join(" > ")
        );
    }
    Ok(())
}
