//! Path-system transformations and the radius of `K_2 + H` before and after.

use planar_spex::spectral::SpectralConfig;
use planar_spex::theorems::{transformation_path, verify_lemma9, PathSystem};

fn main() -> planar_spex::Result<()> {
    let from = PathSystem::new([2, 2, 2, 3, 1])?;
    let target = PathSystem::new([5, 4, 1])?;
    match transformation_path(&from, &target)? {
        Some(steps) => {
            println!("{from}");
            for s in steps {
                println!("  ({},{}) -> {}", s.s1, s.s2, s.result);
            }
        }
        None => println!("no greedy sequence from {from} to {target}"),
    }

    let cfg = SpectralConfig::default();
    for (s1, s2) in [(6, 1), (6, 2), (6, 3), (10, 3)] {
        let n = 60;
        let mut parts = vec![s1, s2];
        parts.resize(n - s1 - s2, 1);
        let rec = verify_lemma9(n, &PathSystem::new(parts)?, s1, s2, &cfg)?;
        println!(
            "n={n} ({s1},{s2}): {:.12} -> {:.12}  gain {:.3e}  strict {}",
            rec.rho_before,
            rec.rho_after,
            rec.gain(),
            rec.strict_increase
        );
    }
    Ok(())
}
