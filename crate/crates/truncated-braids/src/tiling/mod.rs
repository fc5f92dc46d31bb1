//! Regular `{n, d}` tilings: classification, face counts, the order formula,
//! and dart-level synthesis from coset tables.
//!
//! A tiling by `n`-gons with `d` around each vertex lives on the sphere, the
//! Euclidean plane, or the hyperbolic plane according to `(n-2)(d-2)` against
//! 4. In the spherical case the orientation-preserving symmetry group is the
//! von Dyck group `D(2, n, d)` acting simply transitively on darts, so the
//! whole incidence structure can be synthesized from a coset enumeration:
//! darts are group elements, and faces, edges, and vertices are the orbits of
//! right multiplication by `<y>`, `<x>`, and `<xy>`.

mod render;

pub use render::{render, ProjectionModel, SvgTilingDocument, TilingFace};

use serde_json::json;
use thiserror::Error;

use crate::enumerate::{enumerate, perm_rep, EnumStatus, EnumerationError};
use crate::presentation::{triangle_presentation, PresentationError};

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("Schläfli parameters must be at least 2, got ({0}, {1})")]
    ParamTooSmall(usize, usize),
    #[error(
        "{{{0}, {1}}} is not a spherical tiling; only spherical symbols have a finite synthesis"
    )]
    NotSpherical(usize, usize),
    #[error("enumeration of the symmetry group exceeded the cap {0}")]
    CapExceeded(usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("branched cover check requires triangles (n = 3), got n = {0}")]
    NotTriangular(usize),
    #[error("tiling structure is inconsistent: {0}")]
    Inconsistent(String),
}

/// Which constant-curvature plane carries the `{n, d}` tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TilingGeometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// A Schläfli symbol `{n, d}` with its derived geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchlafliSymbol {
    n: usize,
    d: usize,
    geometry: TilingGeometry,
}

impl SchlafliSymbol {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn geometry(&self) -> TilingGeometry {
        self.geometry
    }
}

/// Classify `{n, d}` by the sign of `(n-2)(d-2) - 4`.
pub fn classify(n: usize, d: usize) -> Result<SchlafliSymbol, TilingError> {
    if n < 2 || d < 2 {
        return Err(TilingError::ParamTooSmall(n, d));
    }
    let product = (n - 2) * (d - 2);
    let geometry = match product.cmp(&4) {
        std::cmp::Ordering::Less => TilingGeometry::Spherical,
        std::cmp::Ordering::Equal => TilingGeometry::Euclidean,
        std::cmp::Ordering::Greater => TilingGeometry::Hyperbolic,
    };
    Ok(SchlafliSymbol { n, d, geometry })
}

/// A count that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(v) => Some(v),
            Count::Infinite => None,
        }
    }
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Finite(v) => write!(f, "{v}"),
            Count::Infinite => f.write_str("infinite"),
        }
    }
}

/// Number of faces of the `{n, d}` tiling.
///
/// Spherical symbols give `4d / (4 - (n-2)(d-2))`, which follows from the
/// Euler relation `V - E + F = 2` with `nF = 2E` and `dV = 2E` and is always
/// an exact division; Euclidean and hyperbolic tilings have infinitely many
/// faces.
pub fn face_count(n: usize, d: usize) -> Result<Count, TilingError> {
    let symbol = classify(n, d)?;
    match symbol.geometry() {
        TilingGeometry::Spherical => {
            let numerator = 4 * d as u64;
            let denominator = 4 - ((n - 2) * (d - 2)) as u64;
            if !numerator.is_multiple_of(denominator) {
                return Err(TilingError::Inconsistent(format!(
                    "face count 4·{d}/{denominator} is not integral"
                )));
            }
            Ok(Count::Finite(numerator / denominator))
        }
        _ => Ok(Count::Infinite),
    }
}

/// The order formula `(f(n,d)/2)^(n-1) · n!`, finite exactly when the face
/// count is.
pub fn coxeter_order_formula(n: usize, d: usize) -> Result<Count, TilingError> {
    let f = match face_count(n, d)? {
        Count::Finite(f) => f as u128,
        Count::Infinite => return Ok(Count::Infinite),
    };
    // computed as f^(n-1) · n! / 2^(n-1) to stay in integers when f is odd
    let mut numerator: u128 = 1;
    for _ in 0..n - 1 {
        numerator = numerator.checked_mul(f).ok_or_else(overflow)?;
    }
    for k in 1..=n as u128 {
        numerator = numerator.checked_mul(k).ok_or_else(overflow)?;
    }
    let denominator = 1u128 << (n - 1);
    if !numerator.is_multiple_of(denominator) {
        return Err(TilingError::Inconsistent(format!(
            "(f/2)^{} · {n}! is not integral for f = {f}",
            n - 1
        )));
    }
    let value = numerator / denominator;
    u64::try_from(value)
        .map(Count::Finite)
        .map_err(|_| overflow())
}

fn overflow() -> TilingError {
    TilingError::Inconsistent("order formula overflows".into())
}

/// A spherical `{n, d}` tiling at the dart level.
///
/// Darts are the elements of the von Dyck group `D(2, n, d)`; faces, edges,
/// and vertices partition the darts into orbits of `<y>`, `<x>`, and `<xy>`.
#[derive(Clone, Debug)]
pub struct CombinatorialTiling {
    symbol: SchlafliSymbol,
    dart_count: usize,
    faces: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
    vertices: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    edge_of: Vec<usize>,
    vertex_of: Vec<usize>,
}

impl CombinatorialTiling {
    pub fn symbol(&self) -> SchlafliSymbol {
        self.symbol
    }

    pub fn dart_count(&self) -> usize {
        self.dart_count
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Index of the face containing a dart.
    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.edge_of[dart]
    }

    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart]
    }

    /// Euler characteristic `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// JSON export with the full orbit partition.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.symbol.n(),
            "d": self.symbol.d(),
            "geometry": self.symbol.geometry(),
            "V": self.vertices.len(),
            "E": self.edges.len(),
            "F": self.faces.len(),
            "darts": self.dart_count,
            "faces": self.faces,
            "edges": self.edges,
            "vertices": self.vertices,
        })
    }
}

/// Orbits of a permutation given by an image table, listed in orbit order
/// starting from each orbit's smallest element.
fn orbits(images: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut p = images[start];
        while p != start {
            seen[p] = true;
            orbit.push(p);
            p = images[p];
        }
        out.push(orbit);
    }
    out
}

/// Synthesize the spherical `{n, d}` tiling from a coset enumeration of its
/// von Dyck group over the trivial subgroup.
///
/// All structural invariants are verified before returning: orbit sizes,
/// exact divisions `F = darts/n`, `E = darts/2`, `V = darts/d`, the Euler
/// relation, and dart-level regularity.
pub fn synthesize_tiling(
    n: usize,
    d: usize,
    cap: usize,
) -> Result<CombinatorialTiling, TilingError> {
    let symbol = classify(n, d)?;
    if symbol.geometry() != TilingGeometry::Spherical {
        return Err(TilingError::NotSpherical(n, d));
    }
    let presentation = triangle_presentation(2, n, d)?;
    let result = enumerate(&presentation, &[], cap)?;
    if let EnumStatus::CapExceeded { cap } = result.status() {
        return Err(TilingError::CapExceeded(*cap));
    }
    let rep = perm_rep(&result)?;
    let darts = rep.degree();
    let x = rep.generator_image(0);
    let y = rep.generator_image(1);
    let xy: Vec<usize> = (0..darts).map(|g| y.apply(x.apply(g))).collect();

    let faces = orbits(y.images());
    let edges = orbits(x.images());
    let vertices = orbits(&xy);

    for (orbit_list, expected, what) in [
        (&faces, n, "face"),
        (&edges, 2, "edge"),
        (&vertices, d, "vertex"),
    ] {
        for orbit in orbit_list.iter() {
            if orbit.len() != expected {
                return Err(TilingError::Inconsistent(format!(
                    "{what} orbit has {} darts, expected {expected}",
                    orbit.len()
                )));
            }
        }
    }

    let mut face_of = vec![0; darts];
    let mut edge_of = vec![0; darts];
    let mut vertex_of = vec![0; darts];
    for (i, orbit) in faces.iter().enumerate() {
        for &dart in orbit {
            face_of[dart] = i;
        }
    }
    for (i, orbit) in edges.iter().enumerate() {
        for &dart in orbit {
            edge_of[dart] = i;
        }
    }
    for (i, orbit) in vertices.iter().enumerate() {
        for &dart in orbit {
            vertex_of[dart] = i;
        }
    }

    let tiling = CombinatorialTiling {
        symbol,
        dart_count: darts,
        faces,
        edges,
        vertices,
        face_of,
        edge_of,
        vertex_of,
    };
    verify_tiling(&tiling)?;
    Ok(tiling)
}

fn verify_tiling(t: &CombinatorialTiling) -> Result<(), TilingError> {
    let n = t.symbol.n();
    let d = t.symbol.d();
    let darts = t.dart_count;
    if t.faces.len() * n != darts || t.edges.len() * 2 != darts || t.vertices.len() * d != darts {
        return Err(TilingError::Inconsistent(
            "orbit counts do not divide the dart count as F=darts/n, E=darts/2, V=darts/d".into(),
        ));
    }
    if t.euler_characteristic() != 2 {
        return Err(TilingError::Inconsistent(format!(
            "Euler characteristic {} for a spherical tiling",
            t.euler_characteristic()
        )));
    }
    // regularity: each face meets n distinct edges, each vertex d distinct edges
    for face in &t.faces {
        let mut incident: Vec<usize> = face.iter().map(|&dart| t.edge_of[dart]).collect();
        incident.sort_unstable();
        incident.dedup();
        if incident.len() != n {
            return Err(TilingError::Inconsistent(format!(
                "face touches {} distinct edges, expected {n}",
                incident.len()
            )));
        }
    }
    for vertex in &t.vertices {
        let mut incident: Vec<usize> = vertex.iter().map(|&dart| t.edge_of[dart]).collect();
        incident.sort_unstable();
        incident.dedup();
        if incident.len() != d {
            return Err(TilingError::Inconsistent(format!(
                "vertex touches {} distinct edges, expected {d}",
                incident.len()
            )));
        }
    }
    Ok(())
}

/// Count the quadrilaterals in the branched-cover picture of a triangular
/// tiling: three per face, which must equal the dart count (the order of the
/// von Dyck group).
pub fn branched_cover_check(t: &CombinatorialTiling) -> Result<u64, TilingError> {
    if t.symbol.n() != 3 {
        return Err(TilingError::NotTriangular(t.symbol.n()));
    }
    let quads = 3 * t.faces.len() as u64;
    if quads != t.dart_count as u64 {
        return Err(TilingError::Inconsistent(format!(
            "3F = {quads} disagrees with the dart count {}",
            t.dart_count
        )));
    }
    Ok(quads)
}

/// Spherical symbols with `n, d <= limit`, in lexicographic order.
pub fn spherical_symbols(limit: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=limit {
        for d in 2..=limit {
            if let Ok(symbol) = classify(n, d) {
                if symbol.geometry() == TilingGeometry::Spherical {
                    out.push((n, d));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{group_order, Capped};

    #[test]
    fn classification_trichotomy() {
        assert_eq!(
            classify(3, 5).unwrap().geometry(),
            TilingGeometry::Spherical
        );
        assert_eq!(
            classify(3, 6).unwrap().geometry(),
            TilingGeometry::Euclidean
        );
        assert_eq!(
            classify(5, 4).unwrap().geometry(),
            TilingGeometry::Hyperbolic
        );
        assert_eq!(
            classify(4, 4).unwrap().geometry(),
            TilingGeometry::Euclidean
        );
        assert!(matches!(
            classify(1, 3),
            Err(TilingError::ParamTooSmall(1, 3))
        ));
    }

    #[test]
    fn platonic_face_counts() {
        for (n, d, f) in [(3, 3, 4), (3, 4, 8), (3, 5, 20), (4, 3, 6), (5, 3, 12)] {
            assert_eq!(face_count(n, d).unwrap(), Count::Finite(f));
        }
        for d in 2..=7 {
            assert_eq!(face_count(2, d).unwrap(), Count::Finite(d as u64));
        }
        for n in 2..=7 {
            assert_eq!(face_count(n, 2).unwrap(), Count::Finite(2));
        }
        assert_eq!(face_count(5, 4).unwrap(), Count::Infinite);
        assert_eq!(face_count(3, 6).unwrap(), Count::Infinite);
    }

    #[test]
    fn order_formula_values() {
        assert_eq!(coxeter_order_formula(3, 3).unwrap(), Count::Finite(24));
        assert_eq!(coxeter_order_formula(3, 4).unwrap(), Count::Finite(96));
        assert_eq!(coxeter_order_formula(3, 5).unwrap(), Count::Finite(600));
        assert_eq!(coxeter_order_formula(4, 3).unwrap(), Count::Finite(648));
        assert_eq!(coxeter_order_formula(5, 3).unwrap(), Count::Finite(155_520));
        // n = 2 collapses to the cyclic order d, odd d included
        for d in 2..=9 {
            assert_eq!(
                coxeter_order_formula(2, d).unwrap(),
                Count::Finite(d as u64)
            );
        }
        // d = 2 gives the symmetric group order
        for n in 2..=7 {
            let factorial: u64 = (1..=n as u64).product();
            assert_eq!(
                coxeter_order_formula(n, 2).unwrap(),
                Count::Finite(factorial)
            );
        }
        assert_eq!(coxeter_order_formula(3, 6).unwrap(), Count::Infinite);
        assert_eq!(coxeter_order_formula(4, 4).unwrap(), Count::Infinite);
        assert_eq!(coxeter_order_formula(5, 4).unwrap(), Count::Infinite);
    }

    #[test]
    fn finiteness_is_exactly_the_exceptional_list() {
        let exceptional = [(3, 3), (3, 4), (3, 5), (4, 3), (5, 3)];
        for n in 2..=12 {
            for d in 2..=12 {
                let finite = matches!(coxeter_order_formula(n, d).unwrap(), Count::Finite(_));
                let listed = n == 2 || d == 2 || exceptional.contains(&(n, d));
                assert_eq!(finite, listed, "finiteness mismatch at ({n}, {d})");
            }
        }
    }

    #[test]
    fn tetrahedron_synthesis() {
        let t = synthesize_tiling(3, 3, 10_000).unwrap();
        assert_eq!(t.dart_count(), 12);
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.euler_characteristic(), 2);
    }

    #[test]
    fn icosahedron_synthesis() {
        let t = synthesize_tiling(3, 5, 10_000).unwrap();
        assert_eq!(t.dart_count(), 60);
        assert_eq!(
            (t.vertex_count(), t.edge_count(), t.face_count()),
            (12, 30, 20)
        );
    }

    #[test]
    fn bigon_tiling_synthesis() {
        // three meridional 2-gons
        let t = synthesize_tiling(2, 3, 10_000).unwrap();
        assert_eq!(t.dart_count(), 6);
        assert_eq!(
            (t.vertex_count(), t.edge_count(), t.face_count()),
            (2, 3, 3)
        );
    }

    #[test]
    fn synthesis_rejects_non_spherical() {
        assert!(matches!(
            synthesize_tiling(3, 6, 10_000),
            Err(TilingError::NotSpherical(3, 6))
        ));
        assert!(matches!(
            synthesize_tiling(5, 4, 10_000),
            Err(TilingError::NotSpherical(5, 4))
        ));
    }

    #[test]
    fn face_count_agrees_with_dart_oracle_for_all_small_spherical_symbols() {
        for (n, d) in spherical_symbols(6) {
            let t = synthesize_tiling(n, d, 100_000).unwrap();
            let formula = face_count(n, d).unwrap().finite().unwrap();
            assert_eq!(formula, t.face_count() as u64, "face count at ({n}, {d})");
            assert_eq!(t.dart_count(), 2 * t.edge_count());
            assert_eq!(t.euler_characteristic(), 2);
        }
    }

    #[test]
    fn branched_cover_counts() {
        for (d, expected) in [(2usize, 6u64), (3, 12), (4, 24), (5, 60)] {
            let t = synthesize_tiling(3, d, 10_000).unwrap();
            let quads = branched_cover_check(&t).unwrap();
            assert_eq!(quads, expected);
            // equals the group order computed independently by enumeration
            let p = triangle_presentation(2, 3, d).unwrap();
            assert_eq!(group_order(&p, 10_000).unwrap(), Capped::Complete(expected));
        }
    }

    #[test]
    fn branched_cover_requires_triangles() {
        let t = synthesize_tiling(4, 3, 10_000).unwrap();
        assert!(matches!(
            branched_cover_check(&t),
            Err(TilingError::NotTriangular(4))
        ));
    }

    #[test]
    fn json_export_shape() {
        let t = synthesize_tiling(2, 3, 10_000).unwrap();
        let v = t.to_json();
        assert_eq!(v["n"], 2);
        assert_eq!(v["d"], 3);
        assert_eq!(v["geometry"], "spherical");
        assert_eq!(v["V"], 2);
        assert_eq!(v["E"], 3);
        assert_eq!(v["F"], 3);
        assert_eq!(v["darts"], 6);
        assert_eq!(v["faces"].as_array().unwrap().len(), 3);
        // partitions cover all darts
        let covered: usize = v["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|o| o.as_array().unwrap().len())
            .sum();
        assert_eq!(covered, 6);
    }
}
