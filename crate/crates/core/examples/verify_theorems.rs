//! Verification reports for the three extremal families.

use planar_spex::theorems::{verify_theorem, Theorem, VerifyOptions};

fn main() -> planar_spex::Result<()> {
    let opts = VerifyOptions::default();
    let cases = [
        (Theorem::T2, 8, 3),
        (Theorem::T2, 9, 5),
        (Theorem::T2, 5, 4),
        (Theorem::T3, 9, 2),
        (Theorem::T3, 9, 3),
        (Theorem::T4, 9, 2),
        (Theorem::T4, 40, 6),
    ];
    for (which, n, k) in cases {
        let r = verify_theorem(n, k, which, &opts)?;
        let observed = match &r.search {
            Some(s) => format!(
                "search max {:.6} unique family argmax {}",
                s.max_rho.unwrap_or(f64::NAN),
                s.family_is_unique_argmax
            ),
            None => "search skipped".to_string(),
        };
        println!(
            "{which} n={n:<3} k={k}  planar {:<5} free {:<5} rho {:.6}  hard_ok {:<5} {observed}",
            r.planar, r.pattern_free, r.rho, r.hard_ok
        );
    }
    Ok(())
}
