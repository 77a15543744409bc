use num_bigint::BigInt;
use num_traits::One;

use super::{Polynomial, Rational};

/// `n choose k`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::from(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc is C(n, i) before the update
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `binom(t + a, d)` as a polynomial in `t`: `prod_{s=1}^{d} (t + a - d + s) / d!`.
pub fn binomial_polynomial(a: i64, d: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for s in 1..=d as i64 {
        acc = &acc * &Polynomial::linear(Rational::from(a - d as i64 + s));
    }
    let inv = Rational::new(1, factorial(d as u64)).expect("d! is nonzero");
    acc.scale(&inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert_eq!(binomial(12, 6), BigInt::from(924));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(4, -1), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=30u64 {
            for k in -1..=(n as i64 + 1) {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomial_polynomial_small_cases() {
        assert_eq!(binomial_polynomial(0, 0), Polynomial::one());
        assert_eq!(binomial_polynomial(1, 1), Polynomial::from_integers([1, 1]));
    }

    #[test]
    fn binomial_polynomial_matches_binomial() {
        for d in 0..=12usize {
            for a in -3..=(d as i64 + 2) {
                let p = binomial_polynomial(a, d);
                for t in 0..=20i64 {
                    let top = t + a;
                    if top < 0 {
                        continue;
                    }
                    let expect = binomial(top as u64, d as i64);
                    assert_eq!(p.eval_int(t), Rational::from(expect), "a={a} d={d} t={t}");
                }
            }
        }
    }

    #[test]
    fn unit_square_via_h_star() {
        // 2-cube: i(t) = (t+1)^2 by direct count, h* = (1, 1, 0)
        let h = [1i64, 1, 0];
        let d = 2usize;
        let mut e = Polynomial::zero();
        for (i, hi) in h.iter().enumerate() {
            e = &e + &binomial_polynomial(d as i64 - i as i64, d).scale(&Rational::from(*hi));
        }
        let counted: Vec<_> = (0..=d as i64)
            .map(|t| {
                let n = (0..=t).flat_map(|x| (0..=t).map(move |y| (x, y))).count();
                (t, Rational::from(n as i64))
            })
            .collect();
        assert_eq!(e, Polynomial::interpolate(&counted).unwrap());
        assert_eq!(e, Polynomial::from_integers([1, 2, 1]));
    }
}
