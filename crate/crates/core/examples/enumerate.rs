//! Count connected planar graphs by order and list the smallest ones.
//!
//! cargo run --release --example enumerate -- 8 wheel:4

use std::ops::ControlFlow;
use std::time::Instant;

use planar_spex::enumerate::{enumerate, to_graph6, EnumerationConfig, CONNECTED_PLANAR_COUNTS};
use planar_spex::ForbiddenPattern;

fn main() -> planar_spex::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let pattern: Option<ForbiddenPattern> = args.next().map(|s| s.parse()).transpose()?;

    for n in 1..=max_n {
        let cfg = EnumerationConfig {
            pattern: pattern.clone(),
            ..EnumerationConfig::new(n)
        };
        let start = Instant::now();
        let mut first = Vec::new();
        let count = enumerate(&cfg, |g| {
            if first.len() < 4 {
                first.push(to_graph6(g));
            }
            ControlFlow::Continue(())
        })?;
        let known = match (&pattern, CONNECTED_PLANAR_COUNTS.get(n - 1)) {
            (None, Some(k)) => format!(" (known {k})"),
            _ => String::new(),
        };
        println!(
            "n={n:<2} {count:>6}{known}  {:>8.2?}  first: {}",
            start.elapsed(),
            first.join(" ")
        );
    }
    Ok(())
}
