//! Signs of Ehrhart coefficients, the `Q_k` sign rule, and explicit
//! non-positive examples by dimension.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::ehrhart::{ehrhart_pmn, ehrhart_qk_closed_form, EhrhartPolynomial};
use crate::error::{Error, Result};
use crate::exactnum::Polynomial;
use crate::poset::{make_pmn, make_qk, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignReport {
    pub dim: usize,
    /// One entry per degree `0..=dim`.
    pub signs: Vec<Sign>,
    pub negative_degrees: Vec<usize>,
    pub zero_degrees: Vec<usize>,
    pub is_ehrhart_positive: bool,
}

impl SignReport {
    pub fn negative_count(&self) -> usize {
        self.negative_degrees.len()
    }

    /// Constant, leading and second-highest coefficients must be positive
    /// for any lattice polytope.
    pub fn check_invariants(&self) -> Result<()> {
        let mut fixed = vec![0, self.dim];
        if self.dim >= 1 {
            fixed.push(self.dim - 1);
        }
        for d in fixed {
            if self.signs.get(d) != Some(&Sign::Positive) {
                return Err(Error::Invariant(format!("coefficient of t^{d} is not positive")));
            }
        }
        Ok(())
    }
}

pub fn sign_report(e: &EhrhartPolynomial) -> SignReport {
    sign_report_of(e.poly(), e.dim())
}

pub fn sign_report_of(poly: &Polynomial, dim: usize) -> SignReport {
    let signs: Vec<Sign> = (0..=dim)
        .map(|j| match poly.coeff(j).signum() {
            Ordering::Greater => Sign::Positive,
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
        })
        .collect();
    let degrees_with = |s: Sign| signs.iter().enumerate().filter(|(_, &x)| x == s).map(|(j, _)| j).collect::<Vec<_>>();
    let negative_degrees = degrees_with(Sign::Negative);
    let zero_degrees = degrees_with(Sign::Zero);
    let is_ehrhart_positive = signs.iter().all(|&s| s == Sign::Positive);
    SignReport { dim, signs, negative_degrees, zero_degrees, is_ehrhart_positive }
}

/// Predicted sign of the coefficient of `t^j` in `i(O_{Q_k}, t)` for
/// `1 <= j <= k - 1`: negative exactly when `m = k - j + 1` satisfies
/// `m >= 20` and `4 | m`.
pub fn qk_sign_predicted(k: usize, j: usize) -> Result<Sign> {
    if j < 1 || j + 1 > k {
        return Err(Error::OutOfRange(format!("need 1 <= j <= k - 1, got k = {k}, j = {j}")));
    }
    let m = k - j + 1;
    Ok(if m >= 20 && m.is_multiple_of(4) { Sign::Negative } else { Sign::Positive })
}

/// Number of multiples of 4 in `[20, k]`.
pub fn qk_negative_count(k: usize) -> usize {
    (k / 4).saturating_sub(4)
}

/// `Q_{4l+16}`: the smallest member of the `Q` family with exactly `l`
/// negative coefficients. The count is re-checked on the exact polynomial.
pub fn poset_with_negatives(ell: usize) -> Result<Poset> {
    if ell == 0 {
        return Err(Error::OutOfRange("need ell >= 1".into()));
    }
    let k = 4 * ell + 16;
    let report = sign_report(&ehrhart_qk_closed_form(k));
    if report.negative_count() != ell {
        return Err(Error::Invariant(format!(
            "Q_{k} has {} negative coefficients, expected {ell}",
            report.negative_count()
        )));
    }
    Ok(make_qk(k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Found {
        family: String,
        poset: Poset,
        ehrhart: EhrhartPolynomial,
        report: SignReport,
    },
    /// Dimensions 12 and 13: no example is known and none is ruled out.
    Unknown,
    /// Every order polytope of this dimension is known to be Ehrhart positive.
    NoneUpToProvenBound,
}

/// The largest dimension for which positivity of all order polytopes is
/// established.
pub const PROVEN_POSITIVE_MAX_DIM: usize = 11;

/// A non-Ehrhart-positive order polytope of dimension `d`, when one is known.
///
/// `d >= 21` uses `Q_{d-1}`; `14 <= d <= 20` uses `P_{7,7}, P_{7,8}, ...,
/// P_{10,10}`. Each returned example is re-verified.
pub fn counterexample_for_dimension(d: usize) -> Result<Counterexample> {
    let (family, poset, ehrhart) = match d {
        0 => return Err(Error::OutOfRange("dimension must be at least 1".into())),
        1..=PROVEN_POSITIVE_MAX_DIM => return Ok(Counterexample::NoneUpToProvenBound),
        12 | 13 => return Ok(Counterexample::Unknown),
        14..=20 => {
            let m = 7 + (d - 14) / 2;
            let n = d - m;
            (format!("P_{{{m},{n}}}"), make_pmn(m, n), ehrhart_pmn(m, n)?)
        }
        _ => {
            let k = d - 1;
            (format!("Q_{k}"), make_qk(k), ehrhart_qk_closed_form(k))
        }
    };
    let report = sign_report(&ehrhart);
    if report.is_ehrhart_positive || poset.len() != d {
        return Err(Error::Invariant(format!("{family} is not a counterexample in dimension {d}")));
    }
    Ok(Counterexample::Found { family, poset, ehrhart, report })
}
