//! Loops in the coefficient sphere: trefoil meridians, Seifert orbits, root
//! tracking, and winding numbers.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{circle_act, roots_to_coeffs, GeometryError, KnotPolyline, RootTriple, SpherePoint};
use crate::perm::Perm;

/// Winding number of a closed cyclic sequence of nonzero complex values
/// around the origin, by principal-branch angle summation.
///
/// Any single step of `pi/2` or more is an undersampling error, never
/// silently unwrapped.
fn winding_number(values: &[Complex64], min_modulus: f64) -> Result<i64, GeometryError> {
    let mut total = 0.0;
    for i in 0..values.len() {
        let current = values[i];
        if current.norm() < min_modulus {
            return Err(GeometryError::DiscriminantTooSmall(current.norm()));
        }
        let next = values[(i + 1) % values.len()];
        let step = (next / current).arg();
        if step.abs() >= PI / 2.0 {
            return Err(GeometryError::Undersampled(step.abs()));
        }
        total += step;
    }
    let turns = total / TAU;
    Ok(turns.round() as i64)
}

/// Winding of the discriminant around 0 along a closed loop of sphere
/// points.
pub fn discriminant_winding(points: &[SpherePoint]) -> Result<i64, GeometryError> {
    let values: Vec<Complex64> = points.iter().map(SpherePoint::discriminant).collect();
    winding_number(&values, 1e-6)
}

/// Sample the polynomial family
/// `p_t(z) = (z + 1 + e^(i pi t)) (z + 1 - e^(i pi t)) (z - 1)` over
/// `t in [0, 1]`, recentered and rescaled onto the coefficient sphere.
///
/// The roots of `p_t` sum to -1, so each triple is shifted by +1/3 before
/// normalization. Returns the sampled loop together with the winding number
/// of its discriminant around 0, and checks that the discriminant never
/// comes close to vanishing along the way.
pub fn meridian_loop(steps: usize) -> Result<(Vec<SpherePoint>, i64), GeometryError> {
    if steps < 64 {
        return Err(GeometryError::TooFewSamples {
            got: steps,
            need: 64,
        });
    }
    let mut points = Vec::with_capacity(steps);
    for j in 0..steps {
        let t = j as f64 / (steps - 1) as f64;
        let e = Complex64::from_polar(1.0, PI * t);
        let shift = Complex64::new(1.0 / 3.0, 0.0);
        let triple = RootTriple::new([-e + shift - 1.0, e + shift - 1.0, shift + 1.0])?;
        let point = roots_to_coeffs(&triple)?;
        let magnitude = point.discriminant().norm();
        if magnitude < 1e-6 {
            return Err(GeometryError::DiscriminantTooSmall(magnitude));
        }
        points.push(point);
    }
    let winding = discriminant_winding(&points)?;
    Ok((points, winding))
}

/// Best matching of two root triples: the assignment minimizing the largest
/// matched distance, accepted only when that distance stays below half the
/// smaller root separation.
fn match_triples(a: &RootTriple, b: &RootTriple) -> Option<Perm> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let ra = a.roots();
    let rb = b.roots();
    let mut best: Option<([usize; 3], f64)> = None;
    for perm in PERMS {
        let worst = (0..3)
            .map(|i| (ra[i] - rb[perm[i]]).norm())
            .fold(0.0f64, f64::max);
        if best.is_none_or(|(_, d)| worst < d) {
            best = Some((perm, worst));
        }
    }
    let (perm, worst) = best?;
    let limit = 0.5 * a.min_separation().min(b.min_separation());
    if worst >= limit {
        return None;
    }
    Perm::from_images(perm.to_vec()).ok()
}

/// The permutation of the starting roots induced by tracking them around the
/// closed family, including the wrap-around step from the last triple back
/// to the first.
pub fn monodromy(family: &[RootTriple]) -> Result<Perm, GeometryError> {
    if family.len() < 2 {
        return Err(GeometryError::TooFewSamples {
            got: family.len(),
            need: 2,
        });
    }
    let mut net = Perm::identity(3);
    for step in 0..family.len() {
        let current = &family[step];
        let next = &family[(step + 1) % family.len()];
        let sigma =
            match_triples(current, next).ok_or(GeometryError::AmbiguousRootMatching(step))?;
        net = net
            .then(&sigma)
            .expect("triple matchings have fixed degree 3");
    }
    Ok(net)
}

/// Sample the circle-action orbit of a generic point: `zeta = e^(2 pi i t)`
/// for `samples` equally spaced `t in [0, 1)`.
pub fn orbit_samples(
    point: &SpherePoint,
    samples: usize,
) -> Result<Vec<SpherePoint>, GeometryError> {
    if !point.is_generic() {
        return Err(GeometryError::NonGenericPoint);
    }
    if samples < 64 {
        return Err(GeometryError::TooFewSamples {
            got: samples,
            need: 64,
        });
    }
    (0..samples)
        .map(|j| {
            let zeta = Complex64::from_polar(1.0, TAU * j as f64 / samples as f64);
            circle_act(zeta, point)
        })
        .collect()
}

/// The closed curve in 3-space traced by a generic orbit, via stereographic
/// projection from the pole `(a, b) = (0, 1)`.
///
/// The pole lies on an exceptional orbit, so generic orbits never hit it;
/// any sample closer than 0.1 to the pole is still rejected. The third
/// coordinate is negated to orient the projection so that two generic
/// orbits link +6 rather than -6.
pub fn orbit_polyline(point: &SpherePoint, samples: usize) -> Result<KnotPolyline, GeometryError> {
    let sphere_points = orbit_samples(point, samples)?;
    let mut points = Vec::with_capacity(samples);
    let mut params = Vec::with_capacity(samples);
    for (j, q) in sphere_points.iter().enumerate() {
        let (a, b) = (q.a(), q.b());
        // distance to the pole (0, 1) in C^2 = R^4
        let pole_distance = (a.norm_sqr() + (b.re - 1.0) * (b.re - 1.0) + b.im * b.im).sqrt();
        if pole_distance < 0.1 {
            return Err(GeometryError::PoleTooClose(pole_distance));
        }
        let denom = 1.0 - b.re;
        points.push([a.re / denom, a.im / denom, -b.im / denom]);
        params.push(j as f64 / samples as f64);
    }
    KnotPolyline::new(points, params)
}

/// A small SVG plot of a discriminant image curve in the complex plane,
/// with axes and the origin marked.
pub fn discriminant_plot_svg(points: &[SpherePoint]) -> String {
    let values: Vec<Complex64> = points.iter().map(SpherePoint::discriminant).collect();
    let extent = values
        .iter()
        .map(|v| v.re.abs().max(v.im.abs()))
        .fold(1e-12, f64::max)
        * 1.1;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n",
        -extent, -extent, 2.0 * extent, 2.0 * extent
    ));
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    out.push_str(&format!(
        "<line x1=\"{0:.6}\" y1=\"0\" x2=\"{1:.6}\" y2=\"0\" stroke=\"#999\" stroke-width=\"{2:.6}\"/>\n",
        -extent, extent, extent / 256.0
    ));
    out.push_str(&format!(
        "<line x1=\"0\" y1=\"{0:.6}\" x2=\"0\" y2=\"{1:.6}\" stroke=\"#999\" stroke-width=\"{2:.6}\"/>\n",
        -extent, extent, extent / 256.0
    ));
    let mut path = String::new();
    for (i, v) in values.iter().enumerate() {
        let op = if i == 0 { 'M' } else { 'L' };
        path.push_str(&format!("{op} {:.6} {:.6} ", v.re, v.im));
    }
    path.push('Z');
    out.push_str(&format!(
        "<path d=\"{path}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{:.6}\"/>\n",
        extent / 128.0
    ));
    out.push_str(&format!(
        "<circle cx=\"0\" cy=\"0\" r=\"{:.6}\" fill=\"#000\"/>\n",
        extent / 64.0
    ));
    out.push_str("</g>\n</svg>\n");
    out
}
