//! Exact integer and rational arithmetic, dense polynomials and binomial
//! machinery. Nothing in this crate touches floating point.

mod binomial;
mod polynomial;
mod rational;

pub use binomial::{binomial, binomial_polynomial, factorial};
pub use polynomial::Polynomial;
pub use rational::Rational;

pub use num_bigint::BigInt;
