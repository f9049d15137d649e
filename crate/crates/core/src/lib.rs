//! Exact rational toolkit for linear complementarity problems.
//!
//! LCP(q, A) asks for w, z >= 0 with w - A z = q and w^T z = 0. This crate
//! works over arbitrary-precision rationals throughout and provides:
//!
//! - matrix class tests built around column competence (z_i (A z)_i = 0 for
//!   all i forces A z = 0) and its relatives: column adequacy, P/P0,
//!   principal nondegeneracy, semimonotonicity (E0), R0, regularity (R),
//!   and Z-structure, each returning machine-checkable witnesses;
//! - LCP solving by complementary (Lemke) pivoting plus full support-by-
//!   support enumeration of the solution set into polyhedral pieces, with
//!   the induced set of w-solutions and finiteness detection;
//! - principal pivot transforms, Schur complements, and the complementary-
//!   cone local degree, including the sign relation the transform induces
//!   on degrees;
//! - local w-uniqueness certificates for a given solution;
//! - a seeded randomized self-check harness (`verify`) that exercises the
//!   documented invariants and replays the bundled fixture corpus.
//!
//! No floating point is used anywhere; every witness is re-verified exactly
//! before being returned.

pub mod degree;
pub mod error;
pub mod exact_linalg;
pub mod lcp;
pub mod matrix_classes;
pub mod verify;

pub use error::{Error, Result};
pub use exact_linalg::{IndexSet, Matrix, Rational, Vector};
