use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{EhrhartPolynomial, HStarVector, Method};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, binomial_polynomial, Polynomial, Rational};
use crate::poset::{linear_extensions, make_antichain, linear_extensions_bounded, Poset};

/// Default cap for [`eulerian_polynomial`].
pub const EULERIAN_MAX: usize = 20;
/// Cap for the permutation-enumeration route [`eulerian_by_descents`].
pub const EULERIAN_DESCENT_MAX: usize = 10;

/// `i(t) = sum_i h*_i binom(t + d - i, d)`.
pub fn ehrhart_from_hstar(h: &HStarVector) -> Result<EhrhartPolynomial> {
    let d = h.dim();
    let mut poly = Polynomial::zero();
    for (i, hi) in h.entries().iter().enumerate() {
        if hi.is_zero() {
            continue;
        }
        let basis = binomial_polynomial(d as i64 - i as i64, d);
        poly = &poly + &basis.scale(&Rational::from(hi));
    }
    EhrhartPolynomial::new(poly, d, Method::Hstar)
}

/// Inverts [`ehrhart_from_hstar`].
///
/// At `t = s` only `h*_0..h*_s` contribute and `h*_s` enters with
/// coefficient `binom(d, d) = 1`, so the system is solved from `s = 0`
/// upward.
pub fn hstar_from_ehrhart(e: &EhrhartPolynomial) -> Result<HStarVector> {
    let d = e.dim();
    let values: Vec<BigInt> = (0..=d as i64)
        .map(|s| {
            e.eval(s)
                .to_integer()
                .ok_or_else(|| Error::NotEhrhart(format!("i({s}) is not an integer")))
        })
        .collect::<Result<_>>()?;
    let mut h: Vec<BigInt> = Vec::with_capacity(d + 1);
    for s in 0..=d {
        let mut hs = values[s].clone();
        for (i, hi) in h.iter().enumerate() {
            hs -= hi * binomial((s + d - i) as u64, d as i64);
        }
        if hs.is_negative() {
            return Err(Error::NotEhrhart(format!("h*_{s} = {hs} is negative")));
        }
        h.push(hs);
    }
    let h = HStarVector::new(h)?;
    debug_assert_eq!(ehrhart_from_hstar(&h).map(|x| x.poly().clone()).ok(), Some(e.poly().clone()));
    Ok(h)
}

/// `h*_i` = number of linear extensions with `i` descents, relative to a
/// natural labeling.
///
/// The labeling is the lexicographically first linear extension: its `i`-th
/// element gets label `i`. A descent of an extension `(e_1..e_n)` is a
/// position where `label(e_j) > label(e_{j+1})`.
pub fn hstar_via_linear_extensions(p: &Poset) -> Result<HStarVector> {
    let n = p.len();
    let mut exts = linear_extensions(p)?;
    let mut label = vec![0usize; n];
    let mut h = vec![BigInt::zero(); n + 1];
    let Some(reference) = exts.next() else {
        return Err(Error::Invariant("poset without linear extensions".into()));
    };
    for (i, &x) in reference.iter().enumerate() {
        label[x] = i;
    }
    h[0] += 1;
    for ext in exts {
        let descents = ext.windows(2).filter(|w| label[w[0]] > label[w[1]]).count();
        h[descents] += 1;
    }
    HStarVector::new(h)
}

/// `i(O_P, t)` through [`hstar_via_linear_extensions`].
pub fn ehrhart_by_hstar(p: &Poset) -> Result<EhrhartPolynomial> {
    ehrhart_from_hstar(&hstar_via_linear_extensions(p)?)
}

/// h* of an ordinal sum: product of the parts' h*-polynomials.
pub fn hstar_ordinal_sum(hp: &HStarVector, hq: &HStarVector) -> HStarVector {
    let dim = hp.dim() + hq.dim();
    let mut h = vec![BigInt::zero(); dim + 1];
    for (i, a) in hp.entries().iter().enumerate() {
        for (j, b) in hq.entries().iter().enumerate() {
            h[i + j] += a * b;
        }
    }
    HStarVector::new(h).expect("product of h*-vectors is an h*-vector")
}

/// `A_k(z)` as the h*-vector of the `k`-cube, via the triangle recurrence
/// `A(n, j) = (j + 1) A(n-1, j) + (n - j) A(n-1, j-1)`.
pub fn eulerian_polynomial(k: usize) -> Result<HStarVector> {
    eulerian_polynomial_bounded(k, EULERIAN_MAX)
}

pub fn eulerian_polynomial_bounded(k: usize, bound: usize) -> Result<HStarVector> {
    if k > bound {
        return Err(Error::bound("eulerian polynomial", k, bound));
    }
    let mut row = vec![BigInt::from(1)];
    for n in 2..=k {
        let mut next = vec![BigInt::zero(); n];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < row.len() {
                *slot += &row[j] * (j + 1);
            }
            if j >= 1 {
                *slot += &row[j - 1] * (n - j);
            }
        }
        row = next;
    }
    HStarVector::with_dim(row, k)
}

/// Descent histogram over all permutations of `k` letters.
pub fn eulerian_by_descents(k: usize) -> Result<HStarVector> {
    let mut h = vec![BigInt::zero(); k + 1];
    for perm in linear_extensions_bounded(&make_antichain(k), EULERIAN_DESCENT_MAX)? {
        h[perm.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
    }
    HStarVector::new(h)
}

/// `i(O_{P_{m,n}}, t)` from `A_m(z) A_n(z)`.
pub fn ehrhart_pmn(m: usize, n: usize) -> Result<EhrhartPolynomial> {
    let h = hstar_ordinal_sum(&eulerian_polynomial(m)?, &eulerian_polynomial(n)?);
    Ok(ehrhart_from_hstar(&h)?.with_method(Method::Product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::ehrhart_by_counting;
    use crate::poset::{make_chain, make_pmn};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(h: &[BigInt]) -> Vec<i64> {
        h.iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn antichain6_h_star() {
        let e = ehrhart_by_counting(&make_antichain(6)).unwrap();
        let h = hstar_from_ehrhart(&e).unwrap();
        assert_eq!(ints(h.entries()), vec![1, 57, 302, 302, 57, 1, 0]);
    }

    #[test]
    fn chains_are_unimodular_simplices() {
        for n in 0..=6 {
            let e = ehrhart_by_counting(&make_chain(n)).unwrap();
            let mut expect = vec![0; n + 1];
            expect[0] = 1;
            assert_eq!(ints(hstar_from_ehrhart(&e).unwrap().entries()), expect);
            assert_eq!(ints(hstar_via_linear_extensions(&make_chain(n)).unwrap().entries()), expect);
        }
    }

    #[test]
    fn from_hstar_small() {
        let e = ehrhart_from_hstar(&HStarVector::from_i64(&[1, 0, 0]).unwrap()).unwrap();
        assert_eq!(e.poly(), &binomial_polynomial(2, 2));
        let e = ehrhart_from_hstar(&HStarVector::from_i64(&[1, 1]).unwrap()).unwrap();
        assert_eq!(e.poly(), &Polynomial::from_integers([1, 2]));
        assert_eq!(e.method(), Method::Hstar);
    }

    #[test]
    fn p66_linear_coefficient() {
        let h = hstar_ordinal_sum(&eulerian_polynomial(6).unwrap(), &eulerian_polynomial(6).unwrap());
        assert_eq!(ehrhart_from_hstar(&h).unwrap().coeff(1), q("75/22"));
    }

    #[test]
    fn ordinal_sum_products() {
        let a6 = eulerian_polynomial(6).unwrap();
        let a7 = eulerian_polynomial(7).unwrap();
        let e67 = ehrhart_from_hstar(&hstar_ordinal_sum(&a6, &a7)).unwrap();
        assert_eq!(e67.coeff(1), q("61751/15015"));
        let e77 = ehrhart_from_hstar(&hstar_ordinal_sum(&a7, &a7)).unwrap();
        assert_eq!(e77.coeff(1), q("-3041/1430"));
        let unit = HStarVector::from_i64(&[1]).unwrap();
        assert_eq!(hstar_ordinal_sum(&a6, &unit), a6);
        assert_eq!(hstar_ordinal_sum(&unit, &a6), a6);
    }

    #[test]
    fn eulerian_fixtures() {
        assert_eq!(
            ints(eulerian_polynomial(8).unwrap().trimmed()),
            vec![1, 247, 4293, 15619, 15619, 4293, 247, 1]
        );
        assert_eq!(
            ints(eulerian_polynomial(10).unwrap().trimmed()),
            vec![1, 1013, 47840, 455192, 1310354, 1310354, 455192, 47840, 1013, 1]
        );
        assert_eq!(ints(eulerian_polynomial(1).unwrap().trimmed()), vec![1]);
        assert_eq!(eulerian_polynomial(1).unwrap().dim(), 1);
        for k in 0..=8 {
            assert_eq!(eulerian_polynomial(k).unwrap(), eulerian_by_descents(k).unwrap(), "k={k}");
        }
        assert!(eulerian_polynomial(21).is_err());
        assert!(eulerian_by_descents(11).is_err());
    }

    #[test]
    fn pmn_named_coefficients() {
        assert_eq!(ehrhart_pmn(10, 10).unwrap().coeff(1), q("-135276175/58786"));
        assert_eq!(ehrhart_pmn(9, 10).unwrap().coeff(3), q("-454951/12155"));
        let p66 = ehrhart_pmn(6, 6).unwrap();
        assert_eq!(p66.coeff(12), q("1/924"));
        assert_eq!(p66.method(), Method::Product);
    }

    #[test]
    fn pmn_product_matches_counting() {
        for (m, n) in [(1, 1), (2, 3), (3, 2), (4, 4)] {
            let by_count = ehrhart_by_counting(&make_pmn(m, n)).unwrap();
            assert_eq!(ehrhart_pmn(m, n).unwrap().poly(), by_count.poly(), "m={m} n={n}");
        }
    }

    #[test]
    fn rejects_non_ehrhart_input() {
        // 1 + 3t + t^2: h*_1 = 5 - 3 = 2, h*_2 = 11 - 6 - 2*3 = -1
        let e = EhrhartPolynomial::new(Polynomial::from_integers([1, 3, 1]), 2, Method::Counting).unwrap();
        assert!(matches!(hstar_from_ehrhart(&e), Err(Error::NotEhrhart(_))));
        let e = EhrhartPolynomial::new(Polynomial::new(vec![q("1"), q("1/2"), q("1/3")]), 2, Method::Counting)
            .unwrap();
        assert!(matches!(hstar_from_ehrhart(&e), Err(Error::NotEhrhart(_))));
        assert!(HStarVector::from_i64(&[2, 1]).is_err());
        assert!(HStarVector::from_i64(&[1, -1]).is_err());
        assert!(HStarVector::from_i64(&[]).is_err());
    }
}
