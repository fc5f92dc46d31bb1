//! Gauss linking numbers of closed polygonal curves.
//!
//! The Gauss integral over a pair of line segments has a closed form: it is
//! the signed area of the spherical quadrilateral cut out by the four corner
//! directions. Summing it over all segment pairs gives the linking number of
//! two closed polygons exactly, up to rounding.

use super::vec3::{cross, dist, dot, normalize, sub};
use super::{GeometryError, KnotPolyline};

/// A computed linking number: the raw Gauss sum and its nearest integer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinkingNumber {
    pub value: f64,
    pub nearest: i64,
}

/// Gauss linking number of two disjoint closed polylines.
///
/// Errors if the curves come within 1e-3 of each other, or if the summed
/// value strays more than 0.05 from an integer.
pub fn linking_number(
    k1: &KnotPolyline,
    k2: &KnotPolyline,
) -> Result<LinkingNumber, GeometryError> {
    let a = k1.points();
    let b = k2.points();
    let mut min_distance = f64::INFINITY;
    for i in 0..a.len() {
        let (p1, p2) = (a[i], a[(i + 1) % a.len()]);
        for j in 0..b.len() {
            let (q1, q2) = (b[j], b[(j + 1) % b.len()]);
            min_distance = min_distance.min(segment_distance(p1, p2, q1, q2));
        }
    }
    if min_distance <= 1e-3 {
        return Err(GeometryError::CurvesTooClose(min_distance));
    }

    let mut total = 0.0;
    for i in 0..a.len() {
        let (p1, p2) = (a[i], a[(i + 1) % a.len()]);
        for j in 0..b.len() {
            let (q1, q2) = (b[j], b[(j + 1) % b.len()]);
            total += segment_pair_solid_angle(p1, p2, q1, q2);
        }
    }
    // sign fixed so that right-handed crossings count positive
    let value = -total / (4.0 * std::f64::consts::PI);
    let nearest = value.round() as i64;
    if (value - nearest as f64).abs() >= 0.05 {
        return Err(GeometryError::NonIntegerLinking(value));
    }
    Ok(LinkingNumber { value, nearest })
}

/// Signed solid angle swept by the direction `y - x` as `x` runs over the
/// segment `p1 p2` and `y` over `q1 q2`: the spherical quadrilateral with
/// corners at the four end-to-end directions, split into two geodesic
/// triangles.
fn segment_pair_solid_angle(p1: [f64; 3], p2: [f64; 3], q1: [f64; 3], q2: [f64; 3]) -> f64 {
    let u1 = normalize(sub(q1, p1));
    let u2 = normalize(sub(q2, p1));
    let u3 = normalize(sub(q2, p2));
    let u4 = normalize(sub(q1, p2));
    spherical_triangle_area(u1, u2, u3) + spherical_triangle_area(u1, u3, u4)
}

/// Signed area of the spherical triangle spanned by three unit vectors
/// (van Oosterom–Strackee).
fn spherical_triangle_area(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    let numerator = dot(a, cross(b, c));
    let denominator = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    2.0 * numerator.atan2(denominator)
}

/// Closest distance between the segments `p1 p2` and `q1 q2`.
fn segment_distance(p1: [f64; 3], p2: [f64; 3], q1: [f64; 3], q2: [f64; 3]) -> f64 {
    let d1 = sub(p2, p1);
    let d2 = sub(q2, q1);
    let r = sub(p1, q1);
    let a = dot(d1, d1);
    let e = dot(d2, d2);
    let f = dot(d2, r);
    let c = dot(d1, r);
    let b = dot(d1, d2);
    let denom = a * e - b * b;
    let mut s = if denom.abs() > 1e-30 {
        ((b * f - c * e) / denom).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let mut t = if e > 1e-30 { (b * s + f) / e } else { 0.0 };
    if t < 0.0 {
        t = 0.0;
        s = (-c / a).clamp(0.0, 1.0);
    } else if t > 1.0 {
        t = 1.0;
        s = ((b - c) / a).clamp(0.0, 1.0);
    }
    let closest1 = [p1[0] + d1[0] * s, p1[1] + d1[1] * s, p1[2] + d1[2] * s];
    let closest2 = [q1[0] + d2[0] * t, q1[1] + d2[1] * t, q1[2] + d2[2] * t];
    dist(closest1, closest2)
}

#[cfg(test)]
mod tests {
    use super::super::vec3::{self, scale};
    use super::*;

    fn circle(
        center: [f64; 3],
        radius: f64,
        axis_u: [f64; 3],
        axis_v: [f64; 3],
        samples: usize,
    ) -> KnotPolyline {
        let points: Vec<[f64; 3]> = (0..samples)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / samples as f64;
                vec3::add(
                    center,
                    vec3::add(
                        scale(axis_u, radius * t.cos()),
                        scale(axis_v, radius * t.sin()),
                    ),
                )
            })
            .collect();
        let params: Vec<f64> = (0..samples).map(|i| i as f64 / samples as f64).collect();
        KnotPolyline::new(points, params).unwrap()
    }

    /// Independent linking oracle: signed crossings of a generic planar
    /// projection, halved. Positive crossings follow the right-hand rule for
    /// the (over, under) direction pair.
    fn crossing_count_linking(k1: &KnotPolyline, k2: &KnotPolyline) -> f64 {
        // a fixed generic rotation before projecting to the xy-plane
        let (sa, ca) = (0.31f64.sin(), 0.31f64.cos());
        let (sb, cb) = (0.47f64.sin(), 0.47f64.cos());
        let project = |p: [f64; 3]| -> (f64, f64, f64) {
            let q = [p[0], ca * p[1] - sa * p[2], sa * p[1] + ca * p[2]];
            let r = [cb * q[0] + sb * q[2], q[1], -sb * q[0] + cb * q[2]];
            (r[0], r[1], r[2])
        };
        let a = k1.points();
        let b = k2.points();
        let mut total = 0.0;
        for i in 0..a.len() {
            let (p1, p2) = (project(a[i]), project(a[(i + 1) % a.len()]));
            for j in 0..b.len() {
                let (q1, q2) = (project(b[j]), project(b[(j + 1) % b.len()]));
                let d1 = (p2.0 - p1.0, p2.1 - p1.1);
                let d2 = (q2.0 - q1.0, q2.1 - q1.1);
                let denom = d1.0 * d2.1 - d1.1 * d2.0;
                if denom.abs() < 1e-15 {
                    continue;
                }
                let rx = q1.0 - p1.0;
                let ry = q1.1 - p1.1;
                let s = (rx * d2.1 - ry * d2.0) / denom;
                let t = (rx * d1.1 - ry * d1.0) / denom;
                if !(0.0..1.0).contains(&s) || !(0.0..1.0).contains(&t) {
                    continue;
                }
                let z1 = p1.2 + (p2.2 - p1.2) * s;
                let z2 = q1.2 + (q2.2 - q1.2) * t;
                // right-handed sign of (over direction, under direction)
                let sign = if z1 > z2 {
                    (d1.0 * d2.1 - d1.1 * d2.0).signum()
                } else {
                    (d2.0 * d1.1 - d2.1 * d1.0).signum()
                };
                total += sign;
            }
        }
        total / 2.0
    }

    #[test]
    fn far_apart_circles_are_unlinked() {
        let k1 = circle([0.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 64);
        let k2 = circle([5.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 0.0, 1.0], 64);
        let lk = linking_number(&k1, &k2).unwrap();
        assert_eq!(lk.nearest, 0);
        assert!(lk.value.abs() < 1e-9);
    }

    #[test]
    fn hopf_pair_links_once_and_matches_the_crossing_oracle() {
        let k1 = circle([0.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 128);
        let k2 = circle([1.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 0.0, 1.0], 128);
        let gauss = linking_number(&k1, &k2).unwrap();
        let oracle = crossing_count_linking(&k1, &k2);
        assert_eq!(gauss.nearest.unsigned_abs(), 1);
        assert!(
            (gauss.value - oracle).abs() < 1e-6,
            "gauss {} vs crossings {}",
            gauss.value,
            oracle
        );
    }

    #[test]
    fn linking_is_symmetric_and_negates_under_reversal() {
        let k1 = circle([0.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 96);
        let k2 = circle([1.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 0.0, 1.0], 96);
        let ab = linking_number(&k1, &k2).unwrap();
        let ba = linking_number(&k2, &k1).unwrap();
        assert!((ab.value - ba.value).abs() < 1e-6);
        let reversed = linking_number(&k1.reversed(), &k2).unwrap();
        assert!((ab.value + reversed.value).abs() < 1e-6);
    }

    #[test]
    fn two_seifert_orbits_link_six_times() {
        use crate::geometry::{orbit_polyline, SpherePoint};
        let p1 = SpherePoint::from_polar(0.7, 0.3, 1.1).unwrap();
        let p2 = SpherePoint::from_polar(0.5, 2.0, 0.4).unwrap();
        let k1 = orbit_polyline(&p1, 512).unwrap();
        let k2 = orbit_polyline(&p2, 512).unwrap();
        let lk = linking_number(&k1, &k2).unwrap();
        assert_eq!(lk.nearest, 6);
        assert!((lk.value - 6.0).abs() < 0.05);
    }

    #[test]
    fn close_curves_are_rejected() {
        let k1 = circle([0.0, 0.0, 0.0], 1.0, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 64);
        let k2 = k1.translated([0.0, 0.0, 1e-4]);
        assert!(matches!(
            linking_number(&k1, &k2),
            Err(GeometryError::CurvesTooClose(_))
        ));
    }

    #[test]
    fn segment_distance_basics() {
        let d = segment_distance(
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [1.0, 1.0, 0.0],
        );
        assert!((d - 1.0).abs() < 1e-12);
        // crossing segments meet
        let d = segment_distance(
            [-1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.0, -1.0, 0.5],
            [0.0, 1.0, 0.5],
        );
        assert!((d - 0.5).abs() < 1e-12);
    }
}
