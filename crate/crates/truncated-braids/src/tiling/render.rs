//! SVG rendering of regular tilings in all three geometries.
//!
//! Every renderer grows the tiling from a seed face by edge operations:
//! spherical faces are copied by half-turns about edge midpoints until the
//! sphere closes up, Euclidean faces by point reflections through edge
//! midpoints, and hyperbolic faces by inversions in the geodesic carrying
//! the edge. Faces are deduplicated by their tracked center points.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{classify, synthesize_tiling, TilingError, TilingGeometry};
use crate::enumerate::DEFAULT_CAP;

/// How the tiling plane is drawn onto the canvas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionModel {
    StereographicSphere,
    EuclideanPlane,
    PoincareDisk,
}

/// One rendered face: a closed outline (closure implicit) with the expansion
/// generation it was discovered in.
#[derive(Clone, Debug)]
pub struct TilingFace {
    pub outline: Vec<(f64, f64)>,
    pub depth: usize,
}

/// A renderable tiling document over the fixed viewport `[-1.1, 1.1]^2`.
#[derive(Clone, Debug)]
pub struct SvgTilingDocument {
    n: usize,
    d: usize,
    model: ProjectionModel,
    canvas_px: u32,
    faces: Vec<TilingFace>,
}

impl SvgTilingDocument {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn model(&self) -> ProjectionModel {
        self.model
    }

    pub fn canvas_px(&self) -> u32 {
        self.canvas_px
    }

    pub fn faces(&self) -> &[TilingFace] {
        &self.faces
    }

    pub fn polygon_count(&self) -> usize {
        self.faces.len()
    }

    /// Serialize as an SVG 1.1 document.
    pub fn to_svg(&self) -> String {
        let palette = ["#e9c46a", "#7fb3d5", "#95c99c"];
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{px}\" height=\"{px}\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
            px = self.canvas_px
        ));
        out.push_str("<g transform=\"scale(1,-1)\">\n");
        for (i, face) in self.faces.iter().enumerate() {
            let mut d = String::new();
            for (j, (x, y)) in face.outline.iter().enumerate() {
                let op = if j == 0 { 'M' } else { 'L' };
                d.push_str(&format!("{op} {x:.5} {y:.5} "));
            }
            d.push('Z');
            out.push_str(&format!(
                "<path d=\"{d}\" fill=\"{fill}\" stroke=\"#000\" stroke-width=\"0.005\" data-depth=\"{depth}\"/>\n",
                fill = palette[i % palette.len()],
                depth = face.depth
            ));
        }
        if self.model == ProjectionModel::PoincareDisk {
            out.push_str(
                "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.005\"/>\n",
            );
        }
        out.push_str("</g>\n</svg>\n");
        out
    }
}

/// Render the `{n, d}` tiling.
///
/// Spherical symbols draw the complete tiling (the `depth` argument is
/// ignored); Euclidean and hyperbolic symbols draw `depth` generations of
/// edge-adjacent copies of the seed polygon. Hyperbolic depth is clamped
/// to 8, where double precision near the disk boundary gives out.
pub fn render(n: usize, d: usize, depth: usize) -> Result<SvgTilingDocument, TilingError> {
    let symbol = classify(n, d)?;
    let faces = match symbol.geometry() {
        TilingGeometry::Spherical => spherical_faces(n, d)?,
        TilingGeometry::Euclidean => euclidean_faces(n, d, depth),
        TilingGeometry::Hyperbolic => hyperbolic_faces(n, d, depth.min(8))?,
    };
    let model = match symbol.geometry() {
        TilingGeometry::Spherical => ProjectionModel::StereographicSphere,
        TilingGeometry::Euclidean => ProjectionModel::EuclideanPlane,
        TilingGeometry::Hyperbolic => ProjectionModel::PoincareDisk,
    };
    Ok(SvgTilingDocument {
        n,
        d,
        model,
        canvas_px: 512,
        faces,
    })
}

// ---------------------------------------------------------------------------
// spherical
// ---------------------------------------------------------------------------

type V3 = [f64; 3];

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn scale(a: V3, s: f64) -> V3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn normalize(a: V3) -> V3 {
    scale(a, 1.0 / dot(a, a).sqrt())
}

fn dist(a: V3, b: V3) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    dot(d, d).sqrt()
}

/// Great-circle interpolation between unit vectors.
fn slerp(u: V3, v: V3, t: f64) -> V3 {
    let cos = dot(u, v).clamp(-1.0, 1.0);
    let omega = cos.acos();
    if omega < 1e-9 {
        return normalize(add(scale(u, 1.0 - t), scale(v, t)));
    }
    let s = omega.sin();
    add(
        scale(u, ((1.0 - t) * omega).sin() / s),
        scale(v, (t * omega).sin() / s),
    )
}

/// Rotation by pi about the axis through the unit vector `m`.
fn half_turn(m: V3, p: V3) -> V3 {
    add(scale(m, 2.0 * dot(m, p)), scale(p, -1.0))
}

const SPH_SUB: usize = 16;

struct SphereFace {
    /// Boundary edges, each a sampled great-circle arc with both endpoints.
    edges: Vec<Vec<V3>>,
    center: V3,
    depth: usize,
}

fn seed_sphere_face(n: usize, d: usize) -> Vec<Vec<V3>> {
    if n == 2 {
        // a lune with vertices on the x-axis, centered on the north pole;
        // its two edges are the +z meridian tilted by ±pi/d about the x-axis
        let alpha = PI / d as f64;
        let arc = |sign: f64, flip: bool| -> Vec<V3> {
            let mut points: Vec<V3> = (0..=SPH_SUB)
                .map(|i| {
                    let s = PI * i as f64 / SPH_SUB as f64;
                    [s.cos(), sign * s.sin() * alpha.sin(), s.sin() * alpha.cos()]
                })
                .collect();
            if flip {
                points.reverse();
            }
            points
        };
        return vec![arc(-1.0, false), arc(1.0, true)];
    }
    // circumradius from the right spherical triangle with angles
    // pi/n (face center), pi/d (vertex), pi/2 (edge midpoint)
    let cos_r = 1.0 / ((PI / n as f64).tan() * (PI / d as f64).tan());
    let sin_r = (1.0 - cos_r * cos_r).sqrt();
    let vertices: Vec<V3> = (0..n)
        .map(|k| {
            let lon = 2.0 * PI * k as f64 / n as f64;
            [sin_r * lon.cos(), sin_r * lon.sin(), cos_r]
        })
        .collect();
    (0..n)
        .map(|k| {
            let u = vertices[k];
            let v = vertices[(k + 1) % n];
            (0..=SPH_SUB)
                .map(|i| slerp(u, v, i as f64 / SPH_SUB as f64))
                .collect()
        })
        .collect()
}

fn spherical_faces(n: usize, d: usize) -> Result<Vec<TilingFace>, TilingError> {
    let tiling = synthesize_tiling(n, d, DEFAULT_CAP)?;
    let expected = tiling.face_count();

    let seed = SphereFace {
        edges: seed_sphere_face(n, d),
        center: [0.0, 0.0, 1.0],
        depth: 0,
    };
    let mut faces: Vec<SphereFace> = vec![seed];
    let mut centers: Vec<V3> = vec![[0.0, 0.0, 1.0]];
    let mut cursor = 0;
    while cursor < faces.len() {
        for e in 0..faces[cursor].edges.len() {
            let m = faces[cursor].edges[e][SPH_SUB / 2];
            let center = half_turn(m, faces[cursor].center);
            if centers.iter().any(|&c| dist(c, center) < 1e-6) {
                continue;
            }
            let edges: Vec<Vec<V3>> = faces[cursor]
                .edges
                .iter()
                .rev()
                .map(|edge| edge.iter().rev().map(|&p| half_turn(m, p)).collect())
                .collect();
            let depth = faces[cursor].depth + 1;
            centers.push(center);
            faces.push(SphereFace {
                edges,
                center,
                depth,
            });
        }
        cursor += 1;
    }
    if faces.len() != expected {
        return Err(TilingError::Inconsistent(format!(
            "half-turn expansion found {} faces, combinatorial tiling has {expected}",
            faces.len()
        )));
    }

    // a fixed generic tilt keeps every boundary sample away from the
    // projection pole
    let tilts: [(f64, f64); 3] = [(0.37, 0.58), (0.91, 1.17), (1.43, 0.71)];
    'tilt: for &(ax, az) in &tilts {
        let rotate = |p: V3| -> V3 {
            let (sa, ca) = (ax.sin(), ax.cos());
            let q = [p[0], ca * p[1] - sa * p[2], sa * p[1] + ca * p[2]];
            let (sb, cb) = (az.sin(), az.cos());
            [cb * q[0] - sb * q[1], sb * q[0] + cb * q[1], q[2]]
        };
        let mut rendered = Vec::with_capacity(faces.len());
        for face in &faces {
            let mut outline = Vec::new();
            for edge in &face.edges {
                for &p in &edge[..SPH_SUB] {
                    let q = rotate(p);
                    if 1.0 - q[2] < 5e-3 {
                        continue 'tilt;
                    }
                    outline.push((q[0] / (1.0 - q[2]), q[1] / (1.0 - q[2])));
                }
            }
            rendered.push(TilingFace {
                outline,
                depth: face.depth,
            });
        }
        return Ok(rendered);
    }
    Err(TilingError::Inconsistent(
        "no tilt kept the tiling clear of the projection pole".into(),
    ))
}

// ---------------------------------------------------------------------------
// Euclidean
// ---------------------------------------------------------------------------

struct PlaneFace {
    verts: Vec<(f64, f64)>,
    center: (f64, f64),
    depth: usize,
}

fn euclidean_faces(n: usize, _d: usize, depth: usize) -> Vec<TilingFace> {
    let r0 = 0.9 / (2.0 * depth as f64 + 1.0);
    let seed_verts: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64 + PI / n as f64;
            (r0 * theta.cos(), r0 * theta.sin())
        })
        .collect();
    let tol = r0 * 1e-6;
    let mut faces = vec![PlaneFace {
        verts: seed_verts,
        center: (0.0, 0.0),
        depth: 0,
    }];
    let mut centers = vec![(0.0, 0.0)];
    let mut cursor = 0;
    while cursor < faces.len() {
        if faces[cursor].depth == depth {
            cursor += 1;
            continue;
        }
        let m = faces[cursor].verts.len();
        for e in 0..m {
            let u = faces[cursor].verts[e];
            let v = faces[cursor].verts[(e + 1) % m];
            let mid = ((u.0 + v.0) / 2.0, (u.1 + v.1) / 2.0);
            let reflect = |p: (f64, f64)| (2.0 * mid.0 - p.0, 2.0 * mid.1 - p.1);
            let center = reflect(faces[cursor].center);
            if centers
                .iter()
                .any(|c| (c.0 - center.0).hypot(c.1 - center.1) < tol)
            {
                continue;
            }
            let verts: Vec<(f64, f64)> = faces[cursor]
                .verts
                .iter()
                .rev()
                .map(|&p| reflect(p))
                .collect();
            let new_depth = faces[cursor].depth + 1;
            centers.push(center);
            faces.push(PlaneFace {
                verts,
                center,
                depth: new_depth,
            });
        }
        cursor += 1;
    }
    faces
        .into_iter()
        .map(|f| TilingFace {
            outline: f.verts,
            depth: f.depth,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// hyperbolic
// ---------------------------------------------------------------------------

const HYP_SUB: usize = 16;

/// The geodesic through two points of the disk: either a diameter or a
/// circle orthogonal to the unit circle.
enum Geodesic {
    Line { dir: Complex64 },
    Circle { center: Complex64, r2: f64 },
}

fn geodesic_through(u: Complex64, v: Complex64) -> Geodesic {
    let cross = u.re * v.im - u.im * v.re;
    if cross.abs() < 1e-12 {
        let base = if u.norm() > v.norm() { u } else { v };
        return Geodesic::Line {
            dir: base / base.norm(),
        };
    }
    // orthogonality to the unit circle forces 2 Re(conj(p) c) = |p|^2 + 1
    // for p = u, v
    let (a1, b1, r1) = (2.0 * u.re, 2.0 * u.im, u.norm_sqr() + 1.0);
    let (a2, b2, r2) = (2.0 * v.re, 2.0 * v.im, v.norm_sqr() + 1.0);
    let det = a1 * b2 - a2 * b1;
    let center = Complex64::new((r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det);
    Geodesic::Circle {
        center,
        r2: center.norm_sqr() - 1.0,
    }
}

fn reflect_in(geodesic: &Geodesic, z: Complex64) -> Complex64 {
    match geodesic {
        Geodesic::Line { dir } => dir * dir * z.conj(),
        Geodesic::Circle { center, r2 } => center + r2 / (z - center).conj(),
    }
}

struct DiskFace {
    verts: Vec<Complex64>,
    center: Complex64,
    depth: usize,
}

fn hyperbolic_faces(n: usize, d: usize, depth: usize) -> Result<Vec<TilingFace>, TilingError> {
    // hyperbolic circumradius R with cosh R = cot(pi/n) cot(pi/d), drawn at
    // Euclidean radius tanh(R/2)
    let cosh_r = 1.0 / ((PI / n as f64).tan() * (PI / d as f64).tan());
    let big_r = cosh_r.acosh();
    let radius = (big_r / 2.0).tanh();
    let seed_verts: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64))
        .collect();
    let mut faces = vec![DiskFace {
        verts: seed_verts,
        center: Complex64::new(0.0, 0.0),
        depth: 0,
    }];
    let mut centers = vec![Complex64::new(0.0, 0.0)];
    let mut cursor = 0;
    while cursor < faces.len() {
        if faces[cursor].depth == depth {
            cursor += 1;
            continue;
        }
        for e in 0..n {
            let u = faces[cursor].verts[e];
            let v = faces[cursor].verts[(e + 1) % n];
            let geodesic = geodesic_through(u, v);
            let center = reflect_in(&geodesic, faces[cursor].center);
            if centers.iter().any(|c| (c - center).norm() < 1e-9) {
                continue;
            }
            let verts: Vec<Complex64> = faces[cursor]
                .verts
                .iter()
                .rev()
                .map(|&p| reflect_in(&geodesic, p))
                .collect();
            let new_depth = faces[cursor].depth + 1;
            centers.push(center);
            faces.push(DiskFace {
                verts,
                center,
                depth: new_depth,
            });
        }
        cursor += 1;
    }

    let mut rendered = Vec::with_capacity(faces.len());
    for face in &faces {
        let mut outline = Vec::new();
        for e in 0..n {
            let u = face.verts[e];
            let v = face.verts[(e + 1) % n];
            for point in hyperbolic_arc(u, v) {
                if point.norm() >= 1.0 - 1e-9 {
                    return Err(TilingError::Inconsistent(format!(
                        "boundary point at |z| = {} escaped the disk",
                        point.norm()
                    )));
                }
                outline.push((point.re, point.im));
            }
        }
        rendered.push(TilingFace {
            outline,
            depth: face.depth,
        });
    }
    Ok(rendered)
}

/// Sample the geodesic edge from `u` to `v`, excluding the endpoint `v`.
fn hyperbolic_arc(u: Complex64, v: Complex64) -> Vec<Complex64> {
    match geodesic_through(u, v) {
        Geodesic::Line { .. } => (0..HYP_SUB)
            .map(|i| {
                let t = i as f64 / HYP_SUB as f64;
                u * (1.0 - t) + v * t
            })
            .collect(),
        Geodesic::Circle { center, r2 } => {
            let r = r2.sqrt();
            let theta_u = (u - center).arg();
            let mut delta = (v - center).arg() - theta_u;
            // the in-disk arc of an orthogonal circle subtends less than pi
            if delta > PI {
                delta -= 2.0 * PI;
            } else if delta < -PI {
                delta += 2.0 * PI;
            }
            (0..HYP_SUB)
                .map(|i| {
                    let t = i as f64 / HYP_SUB as f64;
                    center + Complex64::from_polar(r, theta_u + delta * t)
                })
                .collect()
        }
    }
}
