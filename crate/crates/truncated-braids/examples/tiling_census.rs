//! Every spherical tiling with small parameters, synthesized at the dart
//! level and checked against the closed-form face count.
//!
//! ```bash
//! cargo run --release --example tiling_census
//! ```

use truncated_braids::tiling::{classify, face_count, spherical_symbols, synthesize_tiling};

fn main() {
    println!(
        "{:<8} {:>6} {:>6} {:>6} {:>7} {:>9} {:>7}",
        "symbol", "V", "E", "F", "darts", "V-E+F", "f(n,d)"
    );
    for (n, d) in spherical_symbols(6) {
        let tiling = synthesize_tiling(n, d, 1_000_000).expect("spherical symbols synthesize");
        let formula = face_count(n, d).unwrap();
        println!(
            "{{{n},{d}}}{:<4} {:>6} {:>6} {:>6} {:>7} {:>9} {:>7}",
            "",
            tiling.vertex_count(),
            tiling.edge_count(),
            tiling.face_count(),
            tiling.dart_count(),
            tiling.euler_characteristic(),
            formula,
        );
    }

    println!();
    for (n, d) in [(3, 6), (4, 4), (5, 4), (7, 3)] {
        let symbol = classify(n, d).unwrap();
        println!(
            "{{{n},{d}}} is {:?}: f(n,d) = {}",
            symbol.geometry(),
            face_count(n, d).unwrap()
        );
    }
}
