//! Finite-geometry toolkit for multiple blocking sets.
//!
//! The crate builds explicit incidence structures — Galois fields, the
//! projective spaces PG(n,q), and abstract 2-(v,k,λ) designs — and provides
//! exact machinery on top of them: secant spectra, t-fold blocking-set
//! verification, spectral incidence bounds with rational-arithmetic
//! certification, the classical extremal constructions (Hermitian curves and
//! surfaces, Baer subplanes, ovoids), and a brute-force / heuristic search
//! engine that establishes ground truth on small geometries.

pub mod blocking;
pub mod constructions;
pub mod designs;
pub mod galois;
pub mod geometry;
pub mod io;
pub mod search;

pub use galois::{Field, FieldElement};
