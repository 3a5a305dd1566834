//! Two-hub structure of the wheel-free family and of a few other graphs.

use planar_spex::families::{book, family_w};
use planar_spex::theorems::structure_witness;
use planar_spex::Graph;

fn main() -> planar_spex::Result<()> {
    let graphs = [
        ("W(12,4)", family_w(12, 4)?),
        ("W(12,6)", family_w(12, 6)?),
        ("W(40,8)", family_w(40, 8)?),
        ("book(9)", book(9)?),
        ("K_2,7", Graph::complete_bipartite(2, 7)),
        ("C_8", Graph::cycle(8)?),
    ];
    for (name, g) in &graphs {
        match structure_witness(g) {
            Some(w) => println!(
                "{name:<8} hubs ({}, {}) adjacent {:<5} R: {:?} parts {:?} consistent {}",
                w.u1,
                w.u2,
                w.hub_edge,
                w.r_class,
                w.path_parts(),
                w.consistent
            ),
            None => println!("{name:<8} no two-hub structure"),
        }
    }
    Ok(())
}
