//! Spectral radius, Perron vector and the hub eigenvector window.

use planar_spex::families::{book, family_f};
use planar_spex::spectral::{eigen_window_check, rho_book, rho_k2_bipartite, spectral_radius};
use planar_spex::Graph;

fn main() -> planar_spex::Result<()> {
    for n in [6, 10, 50] {
        let r = spectral_radius(&Graph::complete_bipartite(2, n - 2), 1e-10)?;
        println!(
            "K_2,{:<3} rho {:.12}  closed form {:.12}  ({} iterations)",
            n - 2,
            r.rho,
            rho_k2_bipartite(n)?,
            r.iterations
        );
        let r = spectral_radius(&book(n)?, 1e-10)?;
        println!(
            "book {n:<4} rho {:.12}  closed form {:.12}",
            r.rho,
            rho_book(n)?
        );
    }

    let g = family_f(12, 3)?;
    let r = spectral_radius(&g, 1e-10)?;
    let perron: Vec<String> = r.perron.iter().map(|x| format!("{x:.4}")).collect();
    println!("\nPerron vector of F(12,3): [{}]", perron.join(", "));

    for n in [20, 30, 50, 100] {
        let w = eigen_window_check(&family_f(n, 3)?, 0, 1, 1e-9)?;
        let outside: Vec<usize> = w
            .entries
            .iter()
            .filter(|e| !e.inside)
            .map(|e| e.vertex)
            .collect();
        println!(
            "F({n},3) window [{:.4}, {:.4}]  hubs at 1: {}  outside: {outside:?}",
            w.lower, w.upper, w.hubs_at_one
        );
    }
    Ok(())
}
