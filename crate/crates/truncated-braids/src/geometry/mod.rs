//! The coefficient model of centered cubics on the unit 3-sphere.
//!
//! A monic cubic `z^3 + a z + b` with roots summing to zero is a point
//! `(a, b)` of `C^2`; restricting to `|a|^2 + |b|^2 = 1` gives the 3-sphere,
//! and the discriminant `-4a^3 - 27b^2` vanishes exactly on a trefoil knot.
//! The weighted circle action `zeta.(a, b) = (zeta^2 a, zeta^3 b)` turns the
//! sphere into a Seifert-fibered space; this module samples its orbits and
//! meridians, tracks roots around loops, and measures winding and linking
//! numbers numerically.

mod cubic;
mod linking;
mod loops;
pub(crate) mod vec3;

pub use cubic::{coeffs_to_roots, roots_to_coeffs};
pub use linking::{linking_number, LinkingNumber};
pub use loops::{
    discriminant_plot_svg, discriminant_winding, meridian_loop, monodromy, orbit_polyline,
    orbit_samples,
};

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("expected a unit complex number, got modulus {0}")]
    NonUnitCircleElement(f64),
    #[error("point is off the unit sphere: |a|^2 + |b|^2 = {0}")]
    NotOnSphere(f64),
    #[error("roots are not centered: |z1 + z2 + z3| = {0}")]
    NotCentered(f64),
    #[error("all three roots coincide at the origin; no unit-sphere rescaling exists")]
    DegenerateRoots,
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { got: usize, need: usize },
    #[error("base point is not generic: need |a| > 0.1 and |b| > 0.1")]
    NonGenericPoint,
    #[error("sample came within {0} of the projection pole")]
    PoleTooClose(f64),
    #[error("discriminant magnitude {0} too close to the trefoil")]
    DiscriminantTooSmall(f64),
    #[error("undersampled loop: angle step {0} exceeds pi/2")]
    Undersampled(f64),
    #[error(
        "ambiguous root matching at step {0}: match distance exceeds half the root separation"
    )]
    AmbiguousRootMatching(usize),
    #[error("polyline is degenerate: {0}")]
    DegeneratePolyline(String),
    #[error("curves are too close for a reliable linking number: min distance {0}")]
    CurvesTooClose(f64),
    #[error("linking value {0} is not within 0.05 of an integer")]
    NonIntegerLinking(f64),
}

/// The discriminant `-4a^3 - 27b^2` of the cubic `z^3 + az + b`.
pub fn discriminant(a: Complex64, b: Complex64) -> Complex64 {
    -4.0 * a * a * a - 27.0 * b * b
}

/// A coefficient pair `(a, b)` on the unit sphere `|a|^2 + |b|^2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint {
    a: Complex64,
    b: Complex64,
}

impl SpherePoint {
    /// Tolerance on the unit-norm condition.
    pub const NORM_TOLERANCE: f64 = 1e-12;

    pub fn new(a: Complex64, b: Complex64) -> Result<Self, GeometryError> {
        let norm = a.norm_sqr() + b.norm_sqr();
        if (norm - 1.0).abs() > Self::NORM_TOLERANCE {
            return Err(GeometryError::NotOnSphere(norm));
        }
        Ok(SpherePoint { a, b })
    }

    /// The point with `|a| = radius` and the given phases; `radius` must lie
    /// in `[0, 1]` so that `|b| = sqrt(1 - radius^2)`.
    pub fn from_polar(radius: f64, theta: f64, phi: f64) -> Result<Self, GeometryError> {
        if !(0.0..=1.0).contains(&radius) {
            return Err(GeometryError::NotOnSphere(radius * radius));
        }
        let a = Complex64::from_polar(radius, theta);
        let b = Complex64::from_polar((1.0 - radius * radius).sqrt(), phi);
        Ok(SpherePoint { a, b })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn discriminant(&self) -> Complex64 {
        discriminant(self.a, self.b)
    }

    /// The Seifert quotient coordinate `[a^3 : b^2]`, as a raw projective
    /// pair.
    pub fn orbifold_coordinate(&self) -> (Complex64, Complex64) {
        (self.a * self.a * self.a, self.b * self.b)
    }

    /// Whether `self` avoids the exceptional orbits and the projection pole
    /// comfortably: `|a| > 0.1` and `|b| > 0.1`.
    pub fn is_generic(&self) -> bool {
        self.a.norm() > 0.1 && self.b.norm() > 0.1
    }
}

/// The weighted circle action `zeta.(a, b) = (zeta^2 a, zeta^3 b)`.
///
/// `zeta` must be a unit complex number; the action preserves the sphere and
/// scales the discriminant by `zeta^6`.
pub fn circle_act(zeta: Complex64, p: &SpherePoint) -> Result<SpherePoint, GeometryError> {
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return Err(GeometryError::NonUnitCircleElement(zeta.norm()));
    }
    let z2 = zeta * zeta;
    SpherePoint::new(z2 * p.a, z2 * zeta * p.b)
}

/// Projective distance between two nonzero pairs: `|x1 y2 - x2 y1|`
/// normalized by the product of norms. Zero exactly when they agree in
/// `CP^1`.
pub fn projective_distance(p: (Complex64, Complex64), q: (Complex64, Complex64)) -> f64 {
    let cross = p.0 * q.1 - q.0 * p.1;
    let np = (p.0.norm_sqr() + p.1.norm_sqr()).sqrt();
    let nq = (q.0.norm_sqr() + q.1.norm_sqr()).sqrt();
    cross.norm() / (np * nq)
}

/// An unordered triple of cubic roots summing to zero.
#[derive(Clone, Copy, Debug)]
pub struct RootTriple {
    roots: [Complex64; 3],
}

impl RootTriple {
    /// Tolerance on the centering condition.
    pub const CENTER_TOLERANCE: f64 = 1e-9;

    pub fn new(roots: [Complex64; 3]) -> Result<Self, GeometryError> {
        let sum = roots[0] + roots[1] + roots[2];
        if sum.norm() > Self::CENTER_TOLERANCE {
            return Err(GeometryError::NotCentered(sum.norm()));
        }
        Ok(RootTriple { roots })
    }

    pub fn roots(&self) -> [Complex64; 3] {
        self.roots
    }

    /// Smallest distance between two of the roots.
    pub fn min_separation(&self) -> f64 {
        let [r0, r1, r2] = self.roots;
        (r0 - r1).norm().min((r1 - r2).norm()).min((r0 - r2).norm())
    }

    /// Whether the triples agree as multisets within `tol`.
    pub fn matches(&self, other: &RootTriple, tol: f64) -> bool {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        PERMS
            .iter()
            .any(|perm| (0..3).all(|i| (self.roots[i] - other.roots[perm[i]]).norm() <= tol))
    }

    /// Every root scaled by a real factor.
    pub fn scaled(&self, factor: f64) -> RootTriple {
        RootTriple {
            roots: self.roots.map(|r| r * factor),
        }
    }
}

/// A closed sampled curve in 3-space; the last point connects back to the
/// first.
#[derive(Clone, Debug)]
pub struct KnotPolyline {
    points: Vec<[f64; 3]>,
    params: Vec<f64>,
}

impl KnotPolyline {
    pub const MIN_SAMPLES: usize = 16;

    pub fn new(points: Vec<[f64; 3]>, params: Vec<f64>) -> Result<Self, GeometryError> {
        if points.len() < Self::MIN_SAMPLES {
            return Err(GeometryError::TooFewSamples {
                got: points.len(),
                need: Self::MIN_SAMPLES,
            });
        }
        if params.len() != points.len() {
            return Err(GeometryError::DegeneratePolyline(format!(
                "{} parameters for {} points",
                params.len(),
                points.len()
            )));
        }
        for i in 0..points.len() {
            let next = points[(i + 1) % points.len()];
            if vec3::dist(points[i], next) < 1e-12 {
                return Err(GeometryError::DegeneratePolyline(format!(
                    "consecutive points {i} and {} coincide",
                    (i + 1) % points.len()
                )));
            }
        }
        Ok(KnotPolyline { points, params })
    }

    pub fn points(&self) -> &[[f64; 3]] {
        &self.points
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same curve with the opposite orientation.
    pub fn reversed(&self) -> KnotPolyline {
        let mut points = self.points.clone();
        let mut params = self.params.clone();
        points.reverse();
        params.reverse();
        KnotPolyline { points, params }
    }

    /// The curve translated by a fixed offset.
    pub fn translated(&self, offset: [f64; 3]) -> KnotPolyline {
        KnotPolyline {
            points: self.points.iter().map(|&p| vec3::add(p, offset)).collect(),
            params: self.params.clone(),
        }
    }

    /// CSV export with header `t,x,y,z`, one row per sample.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,y,z\n");
        for (t, p) in self.params.iter().zip(&self.points) {
            out.push_str(&format!("{t},{},{},{}\n", p[0], p[1], p[2]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn discriminant_special_forms() {
        let b = c(0.3, -0.4);
        assert_eq!(discriminant(c(0.0, 0.0), b), -27.0 * b * b);
        let a = c(-0.7, 0.2);
        assert_eq!(discriminant(a, c(0.0, 0.0)), -4.0 * a * a * a);
        // boundary case: a double root kills the discriminant
        assert!(discriminant(c(-3.0, 0.0), c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn circle_act_identity_and_stabilizers() {
        let p = SpherePoint::from_polar(0.6, 0.4, 1.3).unwrap();
        let same = circle_act(c(1.0, 0.0), &p).unwrap();
        assert!((same.a() - p.a()).norm() < 1e-15);
        assert!((same.b() - p.b()).norm() < 1e-15);

        // zeta = -1 fixes (a, 0) and negates b
        let on_axis = SpherePoint::new(c(0.6, 0.8), c(0.0, 0.0)).unwrap();
        let acted = circle_act(c(-1.0, 0.0), &on_axis).unwrap();
        assert!((acted.a() - on_axis.a()).norm() < 1e-15);
        let generic = SpherePoint::from_polar(0.6, 0.4, 1.3).unwrap();
        let acted = circle_act(c(-1.0, 0.0), &generic).unwrap();
        assert!((acted.a() - generic.a()).norm() < 1e-15);
        assert!((acted.b() + generic.b()).norm() < 1e-15);

        // cube roots of unity fix (0, b)
        let on_b = SpherePoint::new(c(0.0, 0.0), c(0.6, -0.8)).unwrap();
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let acted = circle_act(omega, &on_b).unwrap();
        assert!((acted.a() - on_b.a()).norm() < 1e-15);
        assert!((acted.b() - on_b.b()).norm() < 1e-13);
    }

    #[test]
    fn circle_act_rejects_non_unit_zeta() {
        let p = SpherePoint::from_polar(0.5, 0.0, 0.0).unwrap();
        assert!(matches!(
            circle_act(c(1.1, 0.0), &p),
            Err(GeometryError::NonUnitCircleElement(_))
        ));
    }

    #[test]
    fn discriminant_equivariance_over_random_points() {
        let mut rng = StdRng::seed_from_u64(101);
        for _ in 0..1000 {
            let p = SpherePoint::from_polar(
                rng.gen_range(0.05f64..0.95).sqrt(),
                rng.gen_range(0.0..std::f64::consts::TAU),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
            .unwrap();
            let zeta = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
            let acted = circle_act(zeta, &p).unwrap();
            let expected = zeta.powu(6) * p.discriminant();
            let relative = (acted.discriminant() - expected).norm() / expected.norm().max(1e-300);
            assert!(relative <= 1e-10, "relative error {relative}");
        }
    }

    #[test]
    fn circle_act_preserves_the_norm() {
        let mut rng = StdRng::seed_from_u64(103);
        for _ in 0..1000 {
            let p = SpherePoint::from_polar(
                rng.gen_range(0.0f64..1.0).sqrt(),
                rng.gen_range(0.0..std::f64::consts::TAU),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
            .unwrap();
            let zeta = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
            let acted = circle_act(zeta, &p).unwrap();
            let norm = acted.a().norm_sqr() + acted.b().norm_sqr();
            assert!((norm - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn sphere_point_validation() {
        assert!(SpherePoint::new(c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(SpherePoint::new(c(0.6, 0.0), c(0.8, 0.0)).is_ok());
        assert!(SpherePoint::from_polar(1.2, 0.0, 0.0).is_err());
    }

    #[test]
    fn root_triple_validation_and_matching() {
        assert!(RootTriple::new([c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).is_err());
        let t = RootTriple::new([c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let shuffled = RootTriple::new([c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!(t.matches(&shuffled, 1e-12));
        assert!((t.min_separation() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn polyline_validation() {
        let circle: Vec<[f64; 3]> = (0..32)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 32.0;
                [t.cos(), t.sin(), 0.0]
            })
            .collect();
        let params: Vec<f64> = (0..32).map(|i| i as f64 / 32.0).collect();
        assert!(KnotPolyline::new(circle.clone(), params.clone()).is_ok());

        let mut repeated = circle.clone();
        repeated[5] = repeated[6];
        assert!(matches!(
            KnotPolyline::new(repeated, params.clone()),
            Err(GeometryError::DegeneratePolyline(_))
        ));

        assert!(matches!(
            KnotPolyline::new(circle[..8].to_vec(), params[..8].to_vec()),
            Err(GeometryError::TooFewSamples { .. })
        ));
    }

    #[test]
    fn csv_export_has_one_row_per_sample() {
        let points: Vec<[f64; 3]> = (0..16)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 16.0;
                [t.cos(), t.sin(), 0.1]
            })
            .collect();
        let params: Vec<f64> = (0..16).map(|i| i as f64 / 16.0).collect();
        let line = KnotPolyline::new(points, params).unwrap();
        let csv = line.to_csv();
        assert_eq!(csv.lines().count(), 17);
        assert!(csv.starts_with("t,x,y,z\n"));
    }
}
