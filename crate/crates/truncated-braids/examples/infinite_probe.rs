//! Probe two infinite quotients with a capped enumeration. The cap being
//! exceeded proves nothing; the tiling classification says which plane the
//! associated tiling actually lives in.
//!
//! ```bash
//! cargo run --release --example infinite_probe
//! ```

use truncated_braids::enumerate::EnumStatus;
use truncated_braids::tiling::classify;
use truncated_braids::{braid_presentation, enumerate};

fn main() {
    for (n, d) in [(3, 6), (5, 4)] {
        let presentation = braid_presentation(n, Some(d)).unwrap();
        let result = enumerate(&presentation, &[], 100_000).unwrap();
        let stats = result.stats();
        match result.status() {
            EnumStatus::Complete { index } => {
                println!("B_{n}({d}): completed with order {index} (unexpected!)");
            }
            EnumStatus::CapExceeded { cap } => {
                println!(
                    "B_{n}({d}): cap of {cap} live cosets exceeded after defining {} — inconclusive",
                    stats.total_defined
                );
            }
        }
        let symbol = classify(n, d).unwrap();
        println!(
            "  the {{{n},{d}}} tiling is {:?}: infinitely many faces, corroborating (not proving) infiniteness",
            symbol.geometry()
        );
    }
}
