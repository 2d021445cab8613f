//! Verification engine for Nijenhuis differentials on compact hermitian
//! symmetric spaces.
//!
//! The crate is organized in layers:
//!
//! - [`rootsys`] — exact root systems (A, B, C, D, E6, E7) in ε-coordinates;
//! - [`hermcat`] — the six hermitian symmetric families, their noncompact
//!   root data, orthogonal slice roots and Thimm chains;
//! - [`repforge`] — concrete matrix representations of su(n), so(m),
//!   sp(2n) (fundamental and spin) with exact Gaussian-rational entries;
//! - [`minimality`] — φ-gradings, minimality verdicts, and the exhaustive
//!   E6/E7 nonexistence search;
//! - [`geomcheck`] — residual verification of the differential identities
//!   at random adjoint-orbit points;
//! - [`symring`] — the exact symmetric-polynomial ring in slice variables
//!   with the d and d_N derivations.
//!
//! Everything before `geomcheck` is exact rational arithmetic; the
//! geometric suites are floating point with seeded, reproducible sampling.

pub mod error;
pub mod exact;
pub mod geomcheck;
pub mod hermcat;
pub mod minimality;
pub mod repforge;
pub mod report;
pub mod rootsys;
pub mod symring;

pub use error::{Error, Result};
pub use hermcat::{Space, SpaceTag};
pub use rootsys::{DominantLabels, Family, RatVec, RootSystem};
