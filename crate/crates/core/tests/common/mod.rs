//! Independent brute-force oracles shared by the integration tests. Nothing
//! here calls the routines it is used to check.

#![allow(dead_code)]

use num_bigint::BigInt;
use orderpoly::poset::Poset;

/// Every labeled poset on `n` elements, by filtering all strict relation
/// matrices through the poset axioms.
pub fn all_labeled_posets(n: usize) -> Vec<Poset> {
    let mut index = vec![usize::MAX; n * n];
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            if a != b {
                index[a * n + b] = count;
                count += 1;
            }
        }
    }
    let mut out = Vec::new();
    'outer: for bits in 0u64..1 << count {
        let rel = |a: usize, b: usize| a == b || bits >> index[a * n + b] & 1 == 1;
        for a in 0..n {
            for b in a + 1..n {
                if rel(a, b) && rel(b, a) {
                    continue 'outer;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a == b || !rel(a, b) {
                    continue;
                }
                for c in 0..n {
                    if rel(b, c) && !rel(a, c) {
                        continue 'outer;
                    }
                }
            }
        }
        let leq = (0..n * n).map(|i| rel(i / n, i % n)).collect();
        out.push(Poset::from_relation(n, leq).unwrap());
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum relation matrix over all `n!` relabelings.
pub fn brute_canonical(p: &Poset, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = p.len();
    perms
        .iter()
        .map(|perm| {
            let mut m = vec![false; n * n];
            for a in 0..n {
                for b in 0..n {
                    m[perm[a] * n + perm[b]] = p.leq(a, b);
                }
            }
            m
        })
        .min()
        .unwrap()
}

/// One representative per isomorphism class, found by brute force.
pub fn brute_classes(n: usize) -> Vec<Poset> {
    let perms = permutations(n);
    let mut seen = std::collections::BTreeMap::new();
    for p in all_labeled_posets(n) {
        seen.entry(brute_canonical(&p, &perms)).or_insert(p);
    }
    seen.into_values().collect()
}

/// Order-preserving maps `P -> {0..t}`, enumerated.
pub fn brute_count(p: &Poset, t: usize) -> u64 {
    let n = p.len();
    let mut f = vec![0usize; n];
    let mut count = 0;
    loop {
        if (0..n).all(|a| (0..n).all(|b| !p.leq(a, b) || f[a] <= f[b])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            f[i] += 1;
            if f[i] <= t {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Subsets closed downward, by direct check of every subset.
pub fn brute_ideal_count(p: &Poset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || (0..n).all(|y| !p.leq(y, x) || m >> y & 1 == 1)))
        .count()
}

/// `1^k + 2^k + ... + top^k`.
pub fn naive_power_sum(k: u32, top: u64) -> BigInt {
    (1..=top).map(|i| BigInt::from(i).pow(k)).sum()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
