//! Exact-arithmetic library for dihedral Gauss hypergeometric functions:
//! elementary closed forms, quadratic monodromy invariants built from
//! terminating double hypergeometric sums, θ-polynomial pull-back
//! transformations, and certified Klein coverings for the algebraic cases.
//!
//! Everything is computed over exact domains (ℚ, ℚ[a], fraction fields);
//! every stated identity is checked either as an exact polynomial /
//! rational-function identity or as a truncated power-series identity with
//! an explicit, reported order. No floating point is used anywhere.

pub mod diffcheck;
pub mod error;
pub mod hyper;
pub mod identity;
pub mod json;
pub mod klein;
pub mod laurent;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod series;
pub mod sqrtpoly;
pub mod transforms;

pub use error::{Error, Result};
pub use rational::Rational;
pub use ring::{Field, Ring};

/// ℚ[a]: polynomials in one formal parameter.
pub type QPoly = poly::Poly<Rational>;
/// ℚ(a): the fraction field of ℚ[a].
pub type QRat = ratfunc::RatFunc<Rational>;
