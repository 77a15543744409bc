use super::{EhrhartPolynomial, Method};
use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, Polynomial, Rational};

/// Coefficient of `t^j` in `i(O_{Q_k}, t)`, for `0 <= j <= k + 1`:
///
/// * `j = 0`: 1
/// * `1 <= j <= k`: `(B_m + m) / m * binom(k, j)` with `m = k - j + 1`
/// * `j = k + 1`: `1 / (k + 1)`
///
/// Zero above `k + 1`.
pub fn qk_coefficient(k: usize, j: usize) -> Rational {
    match j {
        0 => Rational::one(),
        j if j <= k => {
            let m = k - j + 1;
            let m_q = Rational::from(m as i64);
            let num = bernoulli_number(m) + &m_q;
            num.checked_div(&m_q).expect("m >= 1") * Rational::from(binomial(k as u64, j as i64))
        }
        j if j == k + 1 => Rational::new(1, k as i64 + 1).expect("k + 1 > 0"),
        _ => Rational::zero(),
    }
}

pub fn ehrhart_qk_closed_form(k: usize) -> EhrhartPolynomial {
    let poly = Polynomial::new((0..=k + 1).map(|j| qk_coefficient(k, j)).collect());
    EhrhartPolynomial::new(poly, k + 1, Method::ClosedFormQk)
        .expect("closed form satisfies the Ehrhart invariants")
}

/// The same coefficient by the unsimplified expansion of
/// `sum_{i=1}^{t+1} i^k` through the power-sum formula:
///
/// `a_j = 1/(k+1) sum_{i=j-1}^{k} binom(i+1, j) binom(k+1, i+1) B_{k-i}`.
pub fn qk_coefficient_raw(k: usize, j: usize) -> Result<Rational> {
    if j < 1 || j > k + 1 {
        return Err(Error::OutOfRange(format!("need 1 <= j <= k + 1, got k = {k}, j = {j}")));
    }
    let k1 = k as u64 + 1;
    let mut sum = Rational::zero();
    for i in j - 1..=k {
        let c = binomial(i as u64 + 1, j as i64) * binomial(k1, i as i64 + 1);
        sum += Rational::from(c) * bernoulli_number(k - i);
    }
    sum.checked_div(&Rational::from(k1 as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::ehrhart_by_counting;
    use crate::poset::make_qk;
    use num_bigint::BigInt;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn q20_linear_coefficient() {
        assert_eq!(ehrhart_qk_closed_form(20).coeff(1), q("-168011/330"));
        assert_eq!(qk_coefficient_raw(20, 1).unwrap(), q("-168011/330"));
    }

    #[test]
    fn q1_and_q0() {
        assert_eq!(ehrhart_qk_closed_form(1).coefficients(), &[q("1"), q("3/2"), q("1/2")]);
        assert_eq!(ehrhart_qk_closed_form(0).poly(), &Polynomial::from_integers([1, 1]));
    }

    #[test]
    fn q5_matches_counting() {
        let counted = ehrhart_by_counting(&make_qk(5)).unwrap();
        assert_eq!(ehrhart_qk_closed_form(5).poly(), counted.poly());
    }

    #[test]
    fn raw_leading_coefficient() {
        for k in 0..=15 {
            assert_eq!(qk_coefficient_raw(k, k + 1).unwrap(), Rational::new(1, k as i64 + 1).unwrap());
        }
    }

    #[test]
    fn raw_recurrence() {
        // a_{j+1}^{(k+1)} = (k+1)/(j+1) a_j^{(k)}
        for k in 0..=12usize {
            for j in 1..=k + 1 {
                let lhs = qk_coefficient_raw(k + 1, j + 1).unwrap();
                let rhs = Rational::new(k as i64 + 1, j as i64 + 1).unwrap() * qk_coefficient_raw(k, j).unwrap();
                assert_eq!(lhs, rhs, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn raw_matches_closed_form() {
        for k in 0..=25 {
            for j in 1..=k + 1 {
                assert_eq!(qk_coefficient_raw(k, j).unwrap(), qk_coefficient(k, j), "k={k} j={j}");
            }
        }
    }

    #[test]
    fn raw_rejects_out_of_range() {
        assert!(matches!(qk_coefficient_raw(3, 0), Err(Error::OutOfRange(_))));
        assert!(qk_coefficient_raw(3, 5).is_err());
    }

    #[test]
    fn power_sum_identity() {
        for k in 0..=12u32 {
            let e = ehrhart_qk_closed_form(k as usize);
            let mut naive = BigInt::from(0);
            for t in 0..=20i64 {
                naive += BigInt::from(t + 1).pow(k);
                assert_eq!(e.eval(t), Rational::from(naive.clone()), "k={k} t={t}");
            }
        }
    }
}
