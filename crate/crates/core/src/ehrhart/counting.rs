use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{EhrhartPolynomial, Method};
use crate::error::Result;
use crate::exactnum::{Polynomial, Rational};
use crate::poset::{ideal_lattice, IdealLattice, Poset};

/// Number of order-preserving maps `P -> {0, ..., t}`.
pub fn count_points(p: &Poset, t: usize) -> Result<BigInt> {
    let lattice = ideal_lattice(p)?;
    Ok(count_points_in(&lattice, t))
}

/// Lattice-point count of the `t`-th dilate from a prebuilt ideal lattice.
///
/// A map `f: P -> {0..t}` is the same as the chain of ideals
/// `{f <= 0} ⊆ {f <= 1} ⊆ ... ⊆ {f <= t-1}`, so the count is the number of
/// length-`t` multichains: `t` zeta passes over the all-ones vector, read at
/// the top ideal.
pub fn count_points_in(lattice: &IdealLattice, t: usize) -> BigInt {
    dilate_counts(lattice, t).pop().expect("t + 1 values")
}

/// `i(P, 0), ..., i(P, t_max)`.
fn dilate_counts(lattice: &IdealLattice, t_max: usize) -> Vec<BigInt> {
    // i(P, t) <= (t+1)^n, and intermediate vector entries never exceed the
    // final count, so u128 is safe whenever that bound fits.
    let bound = BigUint::from(t_max as u64 + 1).pow(lattice.poset_size() as u32);
    if bound < BigUint::one() << 127u32 {
        multichain_counts::<u128>(lattice, t_max, 1)
            .into_iter()
            .map(BigInt::from)
            .collect()
    } else {
        multichain_counts::<BigUint>(lattice, t_max, BigUint::one())
            .into_iter()
            .map(BigInt::from)
            .collect()
    }
}

fn multichain_counts<T>(lattice: &IdealLattice, t_max: usize, one: T) -> Vec<T>
where
    T: Clone + for<'a> std::ops::AddAssign<&'a T>,
{
    let top = lattice.top();
    let mut g = vec![one; lattice.len()];
    let mut out = Vec::with_capacity(t_max + 1);
    out.push(g[top].clone());
    for _ in 0..t_max {
        lattice.zeta(&mut g);
        out.push(g[top].clone());
    }
    out
}

/// Counts at `t = 0..=n` and interpolates.
pub fn ehrhart_by_counting(p: &Poset) -> Result<EhrhartPolynomial> {
    let lattice = ideal_lattice(p)?;
    let n = p.len();
    let points: Vec<(i64, Rational)> = dilate_counts(&lattice, n)
        .into_iter()
        .enumerate()
        .map(|(t, c)| (t as i64, Rational::from(c)))
        .collect();
    let poly = Polynomial::interpolate(&points)?;
    EhrhartPolynomial::new(poly, n, Method::Counting)
}
