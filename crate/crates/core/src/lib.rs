//! Exact engine for effective Nullstellensatz and Briançon–Skoda type
//! degree bounds.
//!
//! The modules build on each other bottom-up:
//!
//! * [`polyring`]: sparse polynomials over ℚ (or GF(p)), monomial orders,
//!   homogenization.
//! * [`groebner`]: Buchberger's algorithm, normal forms, elimination,
//!   saturation, membership.
//! * [`resolution`]: minimal graded free resolutions, Betti tables,
//!   regularity, Fitting ideals and their codimensions.
//! * [`invariants`]: Hilbert series, dimension, degree, emptiness at infinity.
//! * [`bounds`]: the degree-bound formulas evaluated side by side.
//! * [`certificate`]: degree-bounded membership certificates found by exact
//!   linear algebra.
//! * [`localorder`]: vanishing orders along curve branches and integral
//!   closure of monomial ideals.

pub mod bounds;
pub mod certificate;
mod error;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod localorder;
pub mod polyring;
pub mod resolution;

pub use error::{Error, Result};
