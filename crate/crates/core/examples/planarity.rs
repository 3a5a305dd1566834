//! Planarity verdicts with the filter that decided them.

use planar_spex::enumerate::from_graph6;
use planar_spex::families::{family_w, wheel};
use planar_spex::planarity::is_planar;
use planar_spex::{disjoint_union, join, Graph};

fn main() -> planar_spex::Result<()> {
    let petersen = from_graph6("IheA@GUAo")?;
    let cases = [
        ("K_4", Graph::complete(4)),
        ("K_5", Graph::complete(5)),
        ("K_3,3", Graph::complete_bipartite(3, 3)),
        ("K_2,40", Graph::complete_bipartite(2, 40)),
        ("Petersen", petersen),
        ("W_7", wheel(7)?),
        ("W(30,6)", family_w(30, 6)?),
        ("K_3 + C_4", join(&Graph::complete(3), &Graph::cycle(4)?)),
        (
            "K_4 u K_3,3",
            disjoint_union(&Graph::complete(4), &Graph::complete_bipartite(3, 3)),
        ),
    ];
    for (name, g) in cases {
        let v = is_planar(&g);
        println!(
            "{name:<12} n={:<3} m={:<4} planar={:<5} via {:?}",
            g.n(),
            g.edge_count(),
            v.planar,
            v.filter_used
        );
    }
    Ok(())
}
