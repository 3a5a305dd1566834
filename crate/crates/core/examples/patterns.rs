//! Pattern grammar, freeness checks and matching numbers.
//!
//! cargo run --example patterns -- "friendship:3"

use planar_spex::families::{family_f, family_m, family_w};
use planar_spex::patterns::{fits_in_k2m, is_pattern_free, maximum_matching};
use planar_spex::{ForbiddenPattern, Graph};

fn main() -> planar_spex::Result<()> {
    let pattern: ForbiddenPattern = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("wheel:5")
        .parse()?;
    println!(
        "pattern {pattern}: {} vertices, {} edges",
        pattern.graph().n(),
        pattern.graph().edge_count()
    );
    println!("fits in K_2,m: {}", fits_in_k2m(&pattern.graph())?);

    let hosts = [
        ("W(12,5)", family_w(12, 5)?),
        ("F(15,3)", family_f(15, 3)?),
        ("M(15,3)", family_m(15, 3)?),
        ("K_2,10", Graph::complete_bipartite(2, 10)),
        ("K_6", Graph::complete(6)),
    ];
    for (name, g) in &hosts {
        let m = maximum_matching(g);
        println!(
            "{name:<8} {pattern}-free: {:<5}  matching number {}  {:?}",
            is_pattern_free(g, &pattern),
            m.len(),
            m
        );
    }
    Ok(())
}
