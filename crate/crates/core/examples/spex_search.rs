//! Exhaustive maximum spectral radius over pattern-free connected planar
//! graphs, compared with the extremal family.
//!
//! cargo run --release --example spex_search -- 8 wheel:5 4

use planar_spex::enumerate::to_graph6;
use planar_spex::theorems::{paper_family, spex_search, SearchOptions};
use planar_spex::ForbiddenPattern;

fn main() -> planar_spex::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let pattern: ForbiddenPattern = args.next().as_deref().unwrap_or("wheel:4").parse()?;
    let threads: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);

    let opts = SearchOptions {
        threads,
        include_disconnected: true,
        ..SearchOptions::default()
    };
    let report = spex_search(n, Some(&pattern), &opts)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    if let Some(f) = paper_family(n, &pattern) {
        println!("family member: {}", to_graph6(&f));
    }
    Ok(())
}
