//! A dual-graph oracle for the hyperbolic renderer.
//!
//! The renderer grows `{n, d}` by inverting polygons in edge geodesics. The
//! oracle here never touches polygons or inversions: it walks the
//! face-adjacency graph with Möbius transformations — hyperbolic midpoints
//! and half-turns acting on face centers — and counts faces per
//! breadth-first layer. The two must agree generation by generation.

use std::f64::consts::PI;

use num_complex::Complex64;

use truncated_braids::tiling::render;

fn to_origin(c: Complex64, z: Complex64) -> Complex64 {
    (z - c) / (Complex64::new(1.0, 0.0) - c.conj() * z)
}

fn from_origin(c: Complex64, w: Complex64) -> Complex64 {
    (w + c) / (Complex64::new(1.0, 0.0) + c.conj() * w)
}

/// Elliptic Möbius transformation: rotate by `angle` about the point `c`.
fn rotate_about(c: Complex64, angle: f64, z: Complex64) -> Complex64 {
    from_origin(c, Complex64::from_polar(1.0, angle) * to_origin(c, z))
}

/// Hyperbolic midpoint of two points of the disk.
fn midpoint(u: Complex64, v: Complex64) -> Complex64 {
    let w = to_origin(u, v);
    if w.norm() < 1e-15 {
        return u;
    }
    let half = (w.norm().atanh() / 2.0).tanh();
    from_origin(u, w / w.norm() * half)
}

#[derive(Clone, Copy)]
struct OracleFace {
    center: Complex64,
    /// one vertex, enough to reconstruct the regular polygon around `center`
    anchor: Complex64,
}

/// Faces of `{n, d}` per edge-adjacency BFS layer, out to `depth`.
fn bfs_layer_counts(n: usize, d: usize, depth: usize) -> Vec<usize> {
    let cosh_r = 1.0 / ((PI / n as f64).tan() * (PI / d as f64).tan());
    let radius = (cosh_r.acosh() / 2.0).tanh();
    let seed = OracleFace {
        center: Complex64::new(0.0, 0.0),
        anchor: Complex64::new(radius, 0.0),
    };
    let mut layers = vec![1usize];
    let mut centers = vec![seed.center];
    let mut frontier = vec![seed];
    for _ in 0..depth {
        let mut next = Vec::new();
        for face in &frontier {
            let vertices: Vec<Complex64> = (0..n)
                .map(|k| rotate_about(face.center, 2.0 * PI * k as f64 / n as f64, face.anchor))
                .collect();
            for k in 0..n {
                let m = midpoint(vertices[k], vertices[(k + 1) % n]);
                let center = rotate_about(m, PI, face.center);
                if centers.iter().any(|&c| (c - center).norm() < 1e-9) {
                    continue;
                }
                centers.push(center);
                next.push(OracleFace {
                    center,
                    anchor: rotate_about(m, PI, vertices[k]),
                });
            }
        }
        layers.push(next.len());
        frontier = next;
    }
    layers
}

#[test]
fn pentagonal_tiling_depth_two_matches_the_dual_bfs_oracle() {
    let layers = bfs_layer_counts(5, 4, 2);
    // around a degree-4 vertex the fourth face is diagonal: 5 of those, plus
    // two fresh faces per first-layer pentagon
    assert_eq!(layers, vec![1, 5, 15]);
    let total: usize = layers.iter().sum();
    assert_eq!(total, 21);
    assert_eq!(render(5, 4, 2).unwrap().polygon_count(), total);
}

#[test]
fn renderer_generations_match_the_oracle_for_several_symbols() {
    for (n, d) in [(5usize, 4usize), (4, 5), (7, 3), (3, 7)] {
        let layers = bfs_layer_counts(n, d, 3);
        for depth in 0..=3 {
            let expected: usize = layers[..=depth].iter().sum();
            let rendered = render(n, d, depth).unwrap().polygon_count();
            assert_eq!(rendered, expected, "{{{n},{d}}} at depth {depth}");
        }
    }
}

#[test]
fn oracle_layers_grow_for_hyperbolic_symbols() {
    let layers = bfs_layer_counts(4, 5, 4);
    for window in layers.windows(2) {
        assert!(window[1] > window[0]);
    }
}
