//! Words, presentations, and permutations: the parser, free reduction, the
//! strand permutation, and a golden coset table dump.
//!
//! ```bash
//! cargo run --example word_arithmetic
//! ```

use truncated_braids::{braid_permutation, braid_presentation, enumerate, full_twist_word};

fn main() {
    let b4 = braid_presentation(4, None).unwrap();
    println!(
        "B_4 presentation: {} generators, relators:",
        b4.generator_count()
    );
    for relator in b4.relators() {
        println!("  {}", relator.display_with(b4.labels()));
    }

    // the same word in two spellings
    let spelled = b4.parse("s1 s2 s1 s2 s1 s2").unwrap();
    let packed = b4.parse("(s1 s2)^3").unwrap();
    assert_eq!(spelled, packed);
    println!();
    println!("(s1 s2)^3 parses to {packed}");
    println!("full twist on 3 strands: {}", full_twist_word(3).unwrap());

    // a braid word and the permutation it induces on strands
    let word = b4.parse("s1 s3 s2^-1").unwrap();
    let perm = braid_permutation(&word, 4).unwrap();
    println!();
    println!("the braid {word} in B_4 permutes strands as {perm}");

    // reduction
    let noisy = b4.parse("s1 s2 s2^-1 s1^-1 s3").unwrap();
    println!(
        "s1 s2 s2^-1 s1^-1 s3 freely reduces to {}",
        noisy.free_reduce()
    );

    // a complete coset table, dumped in the golden-test format
    let b2 = braid_presentation(2, Some(3)).unwrap();
    let result = enumerate(&b2, &[], 100).unwrap();
    println!();
    println!("coset table of B_2(3) over the trivial subgroup:");
    print!("{}", result.table_dump().unwrap());
}
