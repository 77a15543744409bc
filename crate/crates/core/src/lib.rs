//! Exact Ehrhart polynomials of order polytopes.
//!
//! The order polytope of a finite poset `P` is the set of maps
//! `f: P -> [0, 1]` with `f(a) <= f(b)` whenever `a <= b`. Its Ehrhart
//! polynomial `i(O_P, t)` counts order-preserving maps `P -> {0, ..., t}`.
//! This crate computes it several independent ways, classifies the sign of
//! every coefficient, and builds explicit posets whose polynomial has
//! negative coefficients.
//!
//! Everything is exact: integers are arbitrary precision and every
//! coefficient is a reduced rational.

pub mod bernoulli;
pub mod ehrhart;
pub mod error;
pub mod exactnum;
pub mod poset;
pub mod positivity;
pub mod scan;

pub use error::{Error, Result};
pub use exactnum::{Polynomial, Rational};
