//! Draw one tiling from each regime into `examples-out/`: bigons on the
//! sphere, an equatorial dihedron, the icosahedron, the square tiling of
//! the plane, and pentagons in the Poincaré disk.
//!
//! ```bash
//! cargo run --release --example render_tilings
//! ```

use truncated_braids::tiling::render;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = std::path::Path::new("examples-out");
    std::fs::create_dir_all(out_dir)?;
    for (n, d, depth, name) in [
        (2, 3, 0, "bigons-2-3.svg"),
        (4, 2, 0, "equatorial-4-2.svg"),
        (3, 5, 0, "icosahedron-3-5.svg"),
        (4, 4, 4, "squares-4-4.svg"),
        (5, 4, 3, "pentagons-5-4.svg"),
        (3, 7, 4, "triangles-3-7.svg"),
    ] {
        let doc = render(n, d, depth)?;
        let path = out_dir.join(name);
        std::fs::write(&path, doc.to_svg())?;
        println!(
            "{{{n},{d}}} depth {depth}: {} polygons ({:?}) -> {}",
            doc.polygon_count(),
            doc.model(),
            path.display()
        );
    }
    Ok(())
}
