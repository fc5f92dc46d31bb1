//! Conversions between centered root triples and unit-sphere coefficients.

use num_complex::Complex64;

use super::{GeometryError, RootTriple, SpherePoint};

/// Coefficients of the monic cubic with the given centered roots, rescaled
/// onto the unit sphere.
///
/// With `a = z1 z2 + z2 z3 + z3 z1` and `b = -z1 z2 z3`, the roots are
/// implicitly multiplied by the unique `lambda > 0` solving
/// `lambda^4 |a|^2 + lambda^6 |b|^2 = 1`, and `(lambda^2 a, lambda^3 b)` is
/// returned. The scale is found by bisection on `[1e-6, 1e6]`.
pub fn roots_to_coeffs(triple: &RootTriple) -> Result<SpherePoint, GeometryError> {
    let [z1, z2, z3] = triple.roots();
    let a = z1 * z2 + z2 * z3 + z3 * z1;
    let b = -(z1 * z2 * z3);
    let lambda = normalizing_scale(a.norm_sqr(), b.norm_sqr())?;
    SpherePoint::new(lambda * lambda * a, lambda * lambda * lambda * b)
}

/// The positive solution of `l^4 aa + l^6 bb = 1`, by bisection.
fn normalizing_scale(aa: f64, bb: f64) -> Result<f64, GeometryError> {
    let g = |l: f64| l.powi(4) * aa + l.powi(6) * bb;
    let mut lo = 1e-6;
    let mut hi = 1e6;
    if g(hi) < 1.0 {
        // both coefficients vanish (triple root at the origin) or nearly so
        return Err(GeometryError::DegenerateRoots);
    }
    if g(lo) > 1.0 {
        return Err(GeometryError::DegenerateRoots);
    }
    for _ in 0..300 {
        if hi - lo <= 1e-14 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if g(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The three roots of the depressed cubic `z^3 + a z + b`, with multiplicity.
///
/// Cardano's formula with the larger-magnitude branch, one guarded Newton
/// polish per root, and an exact recentering; each returned root satisfies
/// `|z^3 + a z + b| <= 1e-8 * max(1, |z|^3)`.
pub fn coeffs_to_roots(a: Complex64, b: Complex64) -> RootTriple {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let w = (b * b / 4.0 + a * a * a / 27.0).sqrt();
    let c1 = -b / 2.0 + w;
    let c2 = -b / 2.0 - w;
    let u3 = if c1.norm() >= c2.norm() { c1 } else { c2 };
    if u3.norm() == 0.0 {
        // only for a = b = 0: a triple root at the origin
        return RootTriple {
            roots: [Complex64::new(0.0, 0.0); 3],
        };
    }
    let u = u3.cbrt();
    let mut roots = [Complex64::new(0.0, 0.0); 3];
    let mut uk = u;
    for root in roots.iter_mut() {
        *root = uk - a / (3.0 * uk);
        uk *= omega;
    }
    for z in roots.iter_mut() {
        for _ in 0..2 {
            let f = *z * *z * *z + a * *z + b;
            let df = 3.0 * *z * *z + a;
            if df.norm() < 1e-12 {
                break;
            }
            let candidate = *z - f / df;
            let fc = candidate * candidate * candidate + a * candidate + b;
            if fc.norm() < f.norm() {
                *z = candidate;
            } else {
                break;
            }
        }
    }
    // the residual of the centering condition is at machine scale; remove it
    let mean = (roots[0] + roots[1] + roots[2]) / 3.0;
    for z in roots.iter_mut() {
        *z -= mean;
    }
    RootTriple { roots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn residual(a: Complex64, b: Complex64, z: Complex64) -> f64 {
        (z * z * z + a * z + b).norm() / z.norm().powi(3).max(1.0)
    }

    /// Independent scale recovery: coarse logarithmic scan to bracket the
    /// unit-norm condition, then plain bisection.
    fn oracle_scale(aa: f64, bb: f64) -> f64 {
        let g = |l: f64| l.powi(4) * aa + l.powi(6) * bb;
        let mut lo = 1e-9;
        let mut hi = lo * 1.5;
        while g(hi) < 1.0 {
            lo = hi;
            hi *= 1.5;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 1.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn symmetric_roots_give_minus_one_zero() {
        let t = RootTriple::new([c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let p = roots_to_coeffs(&t).unwrap();
        assert!((p.a() - c(-1.0, 0.0)).norm() < 1e-12);
        assert!(p.b().norm() < 1e-12);
    }

    #[test]
    fn cube_roots_of_unity_give_zero_minus_one() {
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let t = RootTriple::new([c(1.0, 0.0), omega, omega * omega]).unwrap();
        let p = roots_to_coeffs(&t).unwrap();
        assert!(p.a().norm() < 1e-12);
        assert!((p.b() - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn triple_root_at_origin_is_rejected() {
        let t = RootTriple::new([c(0.0, 0.0); 3]).unwrap();
        assert!(matches!(
            roots_to_coeffs(&t),
            Err(GeometryError::DegenerateRoots)
        ));
    }

    #[test]
    fn roots_of_simple_cubics() {
        // z^3 - 1
        let t = coeffs_to_roots(c(0.0, 0.0), c(-1.0, 0.0));
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let expected = RootTriple::new([c(1.0, 0.0), omega, omega * omega]).unwrap();
        assert!(t.matches(&expected, 1e-9));

        // z^3 - z
        let t = coeffs_to_roots(c(-1.0, 0.0), c(0.0, 0.0));
        let expected = RootTriple::new([c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!(t.matches(&expected, 1e-9));
    }

    #[test]
    fn double_root_on_the_discriminant_locus() {
        // z^3 - 3z + 2 = (z - 1)^2 (z + 2); discriminant -4(-27) - 27·4 = 0
        let t = coeffs_to_roots(c(-3.0, 0.0), c(2.0, 0.0));
        let expected = RootTriple::new([c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0)]).unwrap();
        assert!(t.matches(&expected, 1e-6));
        for z in t.roots() {
            assert!(residual(c(-3.0, 0.0), c(2.0, 0.0), z) <= 1e-8);
        }
    }

    #[test]
    fn residual_contract_over_random_coefficients() {
        let mut rng = StdRng::seed_from_u64(401);
        for _ in 0..1000 {
            let a = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let b = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let triple = coeffs_to_roots(a, b);
            for z in triple.roots() {
                assert!(
                    residual(a, b, z) <= 1e-8,
                    "residual {} at a={a}, b={b}",
                    residual(a, b, z)
                );
            }
        }
    }

    #[test]
    fn round_trip_recovers_scaled_roots() {
        let mut rng = StdRng::seed_from_u64(409);
        for _ in 0..1000 {
            let z1 = c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
            let z2 = c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
            let triple = match RootTriple::new([z1, z2, -z1 - z2]) {
                Ok(t) => t,
                Err(_) => continue,
            };
            let point = match roots_to_coeffs(&triple) {
                Ok(p) => p,
                Err(GeometryError::DegenerateRoots) => continue,
                Err(e) => panic!("unexpected error {e}"),
            };
            let [r1, r2, r3] = triple.roots();
            let a = r1 * r2 + r2 * r3 + r3 * r1;
            let b = -(r1 * r2 * r3);
            let lambda = oracle_scale(a.norm_sqr(), b.norm_sqr());
            let recovered = coeffs_to_roots(point.a(), point.b());
            assert!(
                recovered.matches(&triple.scaled(lambda), 1e-9),
                "round trip mismatch: lambda = {lambda}"
            );
        }
    }
}
