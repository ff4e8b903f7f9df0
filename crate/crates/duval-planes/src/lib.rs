//! Exact-arithmetic models of divisor-class lattices on blow-ups of the
//! projective plane and of Hirzebruch surfaces, canonical resolution of
//! double-cover branch curves, and the classification of Du Val double
//! planes — the branch configurations whose minimal double covers are
//! surfaces of general type with non-birational bicanonical map.
//!
//! The crate is organized around five layers:
//!
//! * [`lattice`] — surface models with blow-up centers (possibly infinitely
//!   near) and the integer intersection pairing in the total-transform
//!   basis;
//! * [`resolution`] — the canonical resolution of a branch curve at lattice
//!   level: multiplicity subtractions, the parity rule at `[r,r]`-points,
//!   and the `(-2)`-curves contained in the smooth branch;
//! * [`invariants`] — `χ`, `K²`, `χ(2K + Δ)`, fixed-point counts of the
//!   covering involution, and pencil genera;
//! * [`duval`] and [`ruled`] — the Du Val configurations with their
//!   admissibility rules, reports and classification tables, and the
//!   birational moves between ruled and plane models (elementary
//!   transformations, contraction, the quadratic transformation) with the
//!   elimination certificates for the two impossible shapes;
//! * [`verify`], [`jsonio`], [`cli`] — the regression catalog and the JSON
//!   interfaces behind the `duval-planes` binary.
//!
//! Everything is exact: checked 64-bit integers in the lattices, exact
//! rationals in the few places a division happens, and arbitrary-precision
//! fraction-free elimination in the conic oracle.

pub mod cli;
pub mod conic;
pub mod duval;
pub mod error;
pub mod invariants;
pub mod jsonio;
pub mod lattice;
pub mod resolution;
pub mod ruled;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
