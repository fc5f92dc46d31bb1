//! Finite braid group quotients and the geometry behind them.
//!
//! This library computes, by independent routes, the classical facts about
//! the braid group quotients `B_n(d)` in which every half-twist generator is
//! given finite order `d`:
//!
//! - [`enumerate`]: a deterministic Todd–Coxeter coset enumerator that finds
//!   group orders, subgroup indices, element orders, and permutation
//!   representations of finitely presented groups.
//! - [`presentation`]: builders for the braid quotient and von Dyck triangle
//!   group presentations, plus a small word parser.
//! - [`tiling`]: Schläfli classification of regular `{n, d}` tilings, face
//!   counts, the order formula `(f(n,d)/2)^(n-1) n!`, dart-level synthesis of
//!   spherical tilings from coset tables, and SVG rendering of spherical,
//!   Euclidean, and Poincaré-disk tilings.
//! - [`geometry`]: the unit-sphere model of monic centered cubics `z^3+az+b`,
//!   the weighted circle action `(a, b) -> (z^2 a, z^3 b)`, root tracking and
//!   monodromy, sampled Seifert orbits, winding numbers, and Gauss linking
//!   numbers of polygonal knots.
//! - [`report`]: a verification harness that runs the whole battery and emits
//!   a deterministic JSON report.
//!
//! The `braids` binary exposes the same operations as subcommands; the
//! examples directory exercises each capability end to end.

pub mod enumerate;
pub mod geometry;
pub mod perm;
pub mod presentation;
pub mod report;
pub mod tiling;
pub mod word;

pub use enumerate::{element_order, enumerate, group_order, perm_rep, Capped, DEFAULT_CAP};
pub use perm::{braid_permutation, Perm};
pub use presentation::{braid_presentation, full_twist_word, triangle_presentation, Presentation};
pub use word::{parse_word, Letter, Word};
