//! Von Dyck triangle groups `D(2, 3, d)`: enumerated orders, the
//! quadrilateral count of the branched cover, and the regular
//! representation.
//!
//! ```bash
//! cargo run --release --example triangle_groups
//! ```

use truncated_braids::enumerate::perm_rep;
use truncated_braids::tiling::{branched_cover_check, face_count, synthesize_tiling};
use truncated_braids::{enumerate, triangle_presentation, Word};

fn main() {
    for d in 2..=5 {
        let presentation = triangle_presentation(2, 3, d).unwrap();
        let result = enumerate(&presentation, &[], 10_000).unwrap();
        let order = result.index().unwrap();

        let tiling = synthesize_tiling(3, d, 10_000).unwrap();
        let quads = branched_cover_check(&tiling).unwrap();
        let faces = face_count(3, d).unwrap().finite().unwrap();

        let rep = perm_rep(&result).unwrap();
        let x = Word::generator(0);
        let y = Word::generator(1);
        let xy = x.concat(&y);

        println!("D(2,3,{d}): order {order}, 3·f(3,{d}) = {}", 3 * faces);
        println!(
            "  branched cover: {} triangles x 3 quadrilaterals = {quads} sheets",
            tiling.face_count()
        );
        println!(
            "  regular rep on {} points: ord(x) = {}, ord(y) = {}, ord(xy) = {}",
            rep.degree(),
            rep.word_image(&x).unwrap().order(),
            rep.word_image(&y).unwrap().order(),
            rep.word_image(&xy).unwrap().order(),
        );
        assert_eq!(order as u64, quads);
        assert_eq!(order as u64, 3 * faces);
    }
}
