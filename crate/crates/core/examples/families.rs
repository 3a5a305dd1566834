//! Build the extremal families and print their graph6 codes and radii.
//!
//! cargo run --example families -- 12 5

use planar_spex::enumerate::to_graph6;
use planar_spex::families::{family_f, family_m, family_w};
use planar_spex::spectral::spectral_radius;
use planar_spex::Graph;

type Builder = fn(usize, usize) -> planar_spex::Result<Graph>;

fn main() -> planar_spex::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, k) = match args[..] {
        [n, k, ..] => (n, k),
        _ => (12, 4),
    };
    let builders: [(&str, Builder); 3] = [("W", family_w), ("F", family_f), ("M", family_m)];
    for (name, build) in builders {
        match build(n, k) {
            Ok(g) => {
                let rho = spectral_radius(&g, 1e-10)?.rho;
                println!(
                    "{name}({n},{k})  edges {:>3}  rho {rho:.12}  {}",
                    g.edge_count(),
                    to_graph6(&g)
                );
            }
            Err(e) => println!("{name}({n},{k})  {e}"),
        }
    }
    Ok(())
}
