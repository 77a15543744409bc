//! Bernoulli numbers under the `B_n = B_n(1)` convention, so `B_1 = +1/2`.
//!
//! Many references use `B_1 = -1/2` (the value at 0). The Q_k coefficient
//! formula in [`crate::ehrhart`] only holds with the `+1/2` convention, so
//! every entry point here uses it.
//!
//! The defining recurrence is the power-sum identity at `t = 1`:
//!
//! ```text
//! (n+1) B_n = (n+1) - sum_{i=1}^{n} binom(n+1, i+1) B_{n-i}
//! ```
//!
//! The even-index convolution recurrence ([`bernoulli_even_recurrence`]) is
//! kept as an independent route for cross-checking.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, Polynomial, Rational};

/// Grow-only cache of `B_0..B_len`.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table shared by every free function in this module.
    pub fn global() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::new)
    }

    pub fn get(&self, n: usize) -> Rational {
        {
            let values = self.values.read().expect("bernoulli cache poisoned");
            if let Some(b) = values.get(n) {
                return b.clone();
            }
        }
        let mut values = self.values.write().expect("bernoulli cache poisoned");
        while values.len() <= n {
            let next = next_bernoulli(&values);
            values.push(next);
        }
        values[n].clone()
    }

    /// `B_0..=B_max`.
    pub fn prefix(&self, max: usize) -> Vec<Rational> {
        self.get(max);
        self.values.read().expect("bernoulli cache poisoned")[..=max].to_vec()
    }

    pub fn cached_len(&self) -> usize {
        self.values.read().expect("bernoulli cache poisoned").len()
    }
}

fn next_bernoulli(prev: &[Rational]) -> Rational {
    let n = prev.len();
    let n1 = n as u64 + 1;
    let mut rhs = Rational::from(n1 as i64);
    for i in 1..=n {
        rhs -= Rational::from(binomial(n1, i as i64 + 1)) * &prev[n - i];
    }
    rhs.checked_div(&Rational::from(n1 as i64)).expect("n+1 > 0")
}

pub fn bernoulli_number(n: usize) -> Rational {
    BernoulliTable::global().get(n)
}

/// `B_k(x) = sum_i binom(k, i) B_{k-i}(0) x^i`.
///
/// Note the shift: `B_j(0) = B_j - [j = 1]`. This is forced by
/// `B_k(x+1) = B_k(x) + k x^{k-1}` at `x = 0`.
pub fn bernoulli_polynomial(k: usize) -> Polynomial {
    let coeffs = (0..=k)
        .map(|i| {
            let j = k - i;
            let mut at_zero = bernoulli_number(j);
            if j == 1 {
                at_zero -= Rational::one();
            }
            Rational::from(binomial(k as u64, i as i64)) * at_zero
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `sum_{i=1}^{t} i^n` as a degree-`n+1` polynomial in `t`.
pub fn power_sum_polynomial(n: usize) -> Polynomial {
    let n1 = n as u64 + 1;
    let mut coeffs = vec![Rational::zero(); n + 2];
    for i in 0..=n {
        coeffs[i + 1] = Rational::from(binomial(n1, i as i64 + 1)) * bernoulli_number(n - i);
    }
    Polynomial::new(coeffs).scale(&Rational::new(1, n1).expect("n+1 > 0"))
}

/// `1^n + 2^n + ... + t^n`, evaluated through [`power_sum_polynomial`].
pub fn power_sum(n: usize, t: u64) -> BigInt {
    power_sum_polynomial(n)
        .eval(&Rational::from(BigInt::from(t)))
        .to_integer()
        .expect("power sums are integers")
}

/// `B_{2n}` from `B_2..B_{2n-2}` alone, via
/// `B_{2n} = -1/(2n+1) sum_{j=1}^{n-1} binom(2n, 2j) B_{2j} B_{2(n-j)}`.
///
/// Seeds with `B_2 = 1/6` and never touches the shared table.
pub fn bernoulli_even_recurrence(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "even-index recurrence needs n >= 2, got {n}"
        )));
    }
    // evens[m] = B_{2m}
    let mut evens = vec![Rational::one(), Rational::new(1, 6).expect("nonzero")];
    for m in 2..=n {
        let two_m = 2 * m as u64;
        let mut sum = Rational::zero();
        for j in 1..m {
            sum += Rational::from(binomial(two_m, 2 * j as i64)) * &evens[j] * &evens[m - j];
        }
        let b = -sum.checked_div(&Rational::from(two_m as i64 + 1))?;
        evens.push(b);
    }
    Ok(evens.pop().expect("nonempty"))
}

/// Whether `B_k + k < 0`, decided by exact arithmetic.
///
/// This holds exactly when `k >= 20` and `4 | k`; see
/// [`bk_plus_k_negative_predicted`].
pub fn bk_plus_k_is_negative(k: usize) -> bool {
    (bernoulli_number(k) + Rational::from(k as i64)).is_negative()
}

pub fn bk_plus_k_negative_predicted(k: usize) -> bool {
    k >= 20 && k.is_multiple_of(4)
}
