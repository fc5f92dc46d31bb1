//! The order of the full twist `(s1 s2)^3` in `B_3(d)`, computed by two
//! independent routes that must agree, and the central product identity
//! `|B_3(d)| = ord(twist) · |D(2,3,d)|`.
//!
//! ```bash
//! cargo run --release --example center_order
//! ```

use truncated_braids::enumerate::perm_rep;
use truncated_braids::tiling::face_count;
use truncated_braids::{
    braid_presentation, enumerate, full_twist_word, group_order, triangle_presentation,
};

fn main() {
    let twist = full_twist_word(3).expect("three strands");
    println!("full twist word: {twist}");
    println!();
    println!(
        "{:<6} {:>10} {:>12} {:>12} {:>10}",
        "d", "f(3,d)/2", "index route", "perm route", "|B_3(d)|"
    );
    for d in 2..=5 {
        let presentation = braid_presentation(3, Some(d)).unwrap();

        // route one: |G| / [G : <twist>] from two enumerations
        let full = enumerate(&presentation, &[], 100_000).unwrap();
        let order = full.index().unwrap() as u64;
        let sub = enumerate(&presentation, std::slice::from_ref(&twist), 100_000).unwrap();
        let by_index = order / sub.index().unwrap() as u64;

        // route two: the permutation order of the twist in the regular
        // representation
        let rep = perm_rep(&full).unwrap();
        let by_perm = rep.word_image(&twist).unwrap().order();

        let half_faces = face_count(3, d).unwrap().finite().unwrap() / 2;
        println!("{d:<6} {half_faces:>10} {by_index:>12} {by_perm:>12} {order:>10}");
        assert_eq!(by_index, by_perm);

        // the central extension accounts for the whole group
        let triangle = triangle_presentation(2, 3, d).unwrap();
        let quotient = group_order(&triangle, 100_000).unwrap().complete().unwrap();
        assert_eq!(order, by_index * quotient);
    }
    println!();
    println!("each row: ord(twist) agrees across routes and equals f(3,d)/2,");
    println!("and |B_3(d)| factors as ord(twist) times the triangle group order.");
}
