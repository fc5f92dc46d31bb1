//! Sample a meridional loop around the trefoil, watch its discriminant wind
//! once around zero, and track the roots to recover the half-twist
//! monodromy. Writes the discriminant curve to `examples-out/`.
//!
//! ```bash
//! cargo run --release --example meridian_monodromy
//! ```

use truncated_braids::geometry::{
    coeffs_to_roots, discriminant_plot_svg, meridian_loop, monodromy, RootTriple,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let steps = 256;
    let (points, winding) = meridian_loop(steps)?;
    println!("meridian loop with {steps} samples:");
    println!("  discriminant winding around 0: {winding:+}");

    let family: Vec<RootTriple> = points
        .iter()
        .map(|p| coeffs_to_roots(p.a(), p.b()))
        .collect();
    let perm = monodromy(&family)?;
    println!(
        "  root monodromy: {perm} (transposition: {})",
        perm.is_transposition()
    );

    let first = &family[0];
    let last = &family[family.len() - 1];
    println!(
        "  endpoints carry the same root multiset: {}",
        first.matches(last, 1e-9)
    );

    let out_dir = std::path::Path::new("examples-out");
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("meridian-discriminant.svg");
    std::fs::write(&path, discriminant_plot_svg(&points))?;
    println!("  discriminant image curve -> {}", path.display());
    Ok(())
}
