//! graph6 encoding, decoding and canonical forms.

use planar_spex::enumerate::{canonical_graph6, from_graph6, to_graph6};
use planar_spex::Graph;

fn main() {
    let c5 = Graph::cycle(5).expect("n >= 3");
    let code = to_graph6(&c5);
    println!(
        "C_5 -> {code} -> {:?}",
        from_graph6(&code).map(|g| g.edges().collect::<Vec<_>>())
    );

    let relabeled = c5.permuted(&[3, 0, 4, 1, 2]);
    println!(
        "relabeled {} canonical {} / {}",
        to_graph6(&relabeled),
        canonical_graph6(&c5),
        canonical_graph6(&relabeled)
    );

    for bad in ["", "C l", "Bx", "~?"] {
        match from_graph6(bad) {
            Ok(g) => println!("{bad:?} parsed with n={}", g.n()),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
}
