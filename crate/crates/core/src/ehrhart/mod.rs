//! Ehrhart polynomials of order polytopes.
//!
//! Three independent routes are provided and cross-checked in tests:
//!
//! * [`ehrhart_by_counting`]: lattice points of the `t`-th dilate are
//!   multichains of order ideals; count them for `t = 0..=n` and
//!   interpolate.
//! * [`ehrhart_from_hstar`]: expand an h*-vector in the binomial basis
//!   `binom(t + d - i, d)`. The h*-vector comes from descents of linear
//!   extensions, or from products of Eulerian polynomials for ordinal sums of
//!   antichains.
//! * [`ehrhart_qk_closed_form`]: Bernoulli-number formula for the family
//!   `Q_k`.

mod counting;
mod hstar;
mod qk;
mod table1;

pub use counting::{count_points, count_points_in, ehrhart_by_counting};
pub use hstar::{
    ehrhart_by_hstar, ehrhart_from_hstar, ehrhart_pmn, eulerian_by_descents, eulerian_polynomial,
    eulerian_polynomial_bounded, hstar_from_ehrhart, hstar_ordinal_sum, hstar_via_linear_extensions,
    EULERIAN_DESCENT_MAX, EULERIAN_MAX,
};
pub use qk::{ehrhart_qk_closed_form, qk_coefficient, qk_coefficient_raw};
pub use table1::{run_table1, run_table1_against, table1_fixtures, Table1Mismatch, Table1Report, Table1Row, Table1RowResult};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Counting,
    Hstar,
    ClosedFormQk,
    Product,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Counting => "counting",
            Method::Hstar => "hstar",
            Method::ClosedFormQk => "closed_form_qk",
            Method::Product => "product",
        }
    }
}

/// `i(O_P, t)` for a poset of size `dim`, tagged with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EhrhartPolynomial {
    poly: Polynomial,
    dim: usize,
    method: Method,
}

impl EhrhartPolynomial {
    /// Checks degree, constant term 1, and positivity of the two top
    /// coefficients.
    pub fn new(poly: Polynomial, dim: usize, method: Method) -> Result<Self> {
        if poly.degree() != Some(dim) {
            return Err(Error::NotEhrhart(format!(
                "degree {:?} does not match dimension {dim}",
                poly.degree()
            )));
        }
        if poly.coeff(0) != Rational::one() {
            return Err(Error::NotEhrhart(format!("constant term is {}", poly.coeff(0))));
        }
        if !poly.leading().is_positive() {
            return Err(Error::NotEhrhart("leading coefficient is not positive".into()));
        }
        if dim >= 1 && !poly.coeff(dim - 1).is_positive() {
            return Err(Error::NotEhrhart(format!(
                "coefficient of t^{} is not positive",
                dim - 1
            )));
        }
        Ok(EhrhartPolynomial { poly, dim, method })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Coefficient of `t^j`.
    pub fn coeff(&self, j: usize) -> Rational {
        self.poly.coeff(j)
    }

    pub fn coefficients(&self) -> &[Rational] {
        self.poly.coeffs()
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.poly.eval_int(t)
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

/// `h*_0..h*_d` of a `d`-dimensional order polytope. Always holds exactly
/// `d + 1` entries, trailing zeros included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HStarVector {
    h: Vec<BigInt>,
}

impl HStarVector {
    /// Dimension is `h.len() - 1`. Requires `h_0 = 1` and no negative entry.
    pub fn new(h: Vec<BigInt>) -> Result<Self> {
        match h.first() {
            Some(h0) if h0.is_one() => {}
            Some(h0) => return Err(Error::NotEhrhart(format!("h*_0 = {h0}, expected 1"))),
            None => return Err(Error::NotEhrhart("empty h*-vector".into())),
        }
        if let Some((i, v)) = h.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(Error::NotEhrhart(format!("h*_{i} = {v} is negative")));
        }
        Ok(HStarVector { h })
    }

    pub fn from_i64(h: &[i64]) -> Result<Self> {
        Self::new(h.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Pads `coeffs` with zeros to `dim + 1` entries.
    pub fn with_dim(mut coeffs: Vec<BigInt>, dim: usize) -> Result<Self> {
        while coeffs.len() > dim + 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() > dim + 1 {
            return Err(Error::NotEhrhart(format!(
                "h*-polynomial of degree {} exceeds dimension {dim}",
                coeffs.len() - 1
            )));
        }
        coeffs.resize(dim + 1, BigInt::zero());
        Self::new(coeffs)
    }

    pub fn dim(&self) -> usize {
        self.h.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.h
    }

    /// Entries with trailing zeros removed: the h*-polynomial's coefficients.
    pub fn trimmed(&self) -> &[BigInt] {
        let end = self.h.iter().rposition(|v| !v.is_zero()).map_or(0, |i| i + 1);
        &self.h[..end]
    }

    /// `h*(1)`, the normalized volume; for order polytopes this is the number
    /// of linear extensions.
    pub fn sum(&self) -> BigInt {
        self.h.iter().sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.h.iter().map(ToString::to_string).collect()
    }
}
