//! Finite pointfree topology toolkit.
//!
//! Computes with finite frames, MT-algebras (powerset algebras carrying a
//! subframe of opens), proximity morphisms, and finite topological spaces,
//! and verifies the algebraic laws connecting them — category laws, envelope
//! constructions, spectra, duality — by exhaustive and seeded randomized
//! checking on small instances.
//!
//! Everything is an immutable value with a canonical representation:
//! elements are dense indices or bitmasks, families are sorted, and all
//! structural equalities are plain table comparisons.

pub mod bits;
pub mod error;
pub mod limits;
pub mod order;

pub mod frame;
pub mod mt;
pub mod space;

pub use error::{Error, Result};
