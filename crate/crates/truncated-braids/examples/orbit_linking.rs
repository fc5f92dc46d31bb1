//! Two generic orbits of the weighted circle action, their discriminant
//! winding, the constancy of the quotient coordinate, and their Gauss
//! linking number. Writes one orbit as CSV to `examples-out/`.
//!
//! ```bash
//! cargo run --release --example orbit_linking
//! ```

use truncated_braids::geometry::{
    discriminant_winding, linking_number, orbit_polyline, orbit_samples, projective_distance,
    SpherePoint,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = 512;
    let p1 = SpherePoint::from_polar(0.7, 0.3, 1.1)?;
    let p2 = SpherePoint::from_polar(0.5, 2.0, 0.4)?;

    let orbit = orbit_samples(&p1, samples)?;
    println!("orbit through (a, b) with |a| = 0.7:");
    println!(
        "  discriminant winding: {:+}",
        discriminant_winding(&orbit)?
    );
    let drift = orbit
        .iter()
        .map(|q| projective_distance(p1.orbifold_coordinate(), q.orbifold_coordinate()))
        .fold(0.0f64, f64::max);
    println!("  quotient coordinate [a^3 : b^2] drift along the orbit: {drift:.2e}");

    let k1 = orbit_polyline(&p1, samples)?;
    let k2 = orbit_polyline(&p2, samples)?;
    let lk = linking_number(&k1, &k2)?;
    println!("two distinct fibers as closed curves in 3-space:");
    println!(
        "  Gauss linking number: {:.9} (nearest integer {})",
        lk.value, lk.nearest
    );

    let out_dir = std::path::Path::new("examples-out");
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("orbit.csv");
    std::fs::write(&path, k1.to_csv())?;
    println!("  first orbit sampled to {}", path.display());
    Ok(())
}
