//! The five exceptional finite braid quotients, two ways: coset enumeration
//! against the face-count order formula, plus the two classical families.
//!
//! ```bash
//! cargo run --release --example coxeter_orders
//! ```

use truncated_braids::enumerate::EnumStatus;
use truncated_braids::tiling::{coxeter_order_formula, face_count};
use truncated_braids::{braid_presentation, enumerate};

fn main() {
    println!(
        "{:<10} {:>8} {:>12} {:>12}  stats",
        "group", "f(n,d)", "formula", "enumerated"
    );
    for (n, d) in [(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)] {
        let presentation = braid_presentation(n, Some(d)).expect("valid parameters");
        let result = enumerate(&presentation, &[], 1_000_000).expect("enumeration runs");
        let enumerated = match result.status() {
            EnumStatus::Complete { index } => index.to_string(),
            EnumStatus::CapExceeded { cap } => format!("> cap {cap}"),
        };
        let formula = coxeter_order_formula(n, d).expect("valid parameters");
        let faces = face_count(n, d).expect("valid parameters");
        let stats = result.stats();
        let name = format!("B_{n}({d})");
        println!(
            "{name:<10} {faces:>8} {formula:>12} {enumerated:>12}  defined {}, peak {}, merged {}",
            stats.total_defined, stats.max_live, stats.coincidences
        );
    }

    println!();
    println!("cyclic family B_2(d) and symmetric family B_n(2):");
    for d in 2..=7 {
        let p = braid_presentation(2, Some(d)).unwrap();
        let order = enumerate(&p, &[], 10_000).unwrap().index().unwrap();
        print!("  |B_2({d})| = {order}");
    }
    println!();
    for n in 2..=6 {
        let p = braid_presentation(n, Some(2)).unwrap();
        let order = enumerate(&p, &[], 10_000).unwrap().index().unwrap();
        print!("  |B_{n}(2)| = {order}");
    }
    println!();
}
