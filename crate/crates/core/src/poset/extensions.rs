use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ideal_lattice, Poset};
use crate::error::{Error, Result};

pub const LINEAR_EXTENSIONS_MAX: usize = 12;

/// Depth-first generator of linear extensions, each yielded as the sequence
/// of elements from bottom to top. Candidates at each depth are tried in
/// increasing label order, so the output is lexicographically sorted.
#[derive(Debug, Clone)]
pub struct LinearExtensions {
    n: usize,
    below: Vec<u64>,
    prefix: Vec<usize>,
    next_try: Vec<usize>,
    used: u64,
    done: bool,
}

pub fn linear_extensions(p: &Poset) -> Result<LinearExtensions> {
    linear_extensions_bounded(p, LINEAR_EXTENSIONS_MAX)
}

pub fn linear_extensions_bounded(p: &Poset, bound: usize) -> Result<LinearExtensions> {
    let bound = bound.min(64);
    if p.len() > bound {
        return Err(Error::bound("linear extensions", p.len(), bound));
    }
    let n = p.len();
    Ok(LinearExtensions {
        n,
        below: (0..n).map(|x| p.below_mask(x)).collect(),
        prefix: Vec::with_capacity(n),
        next_try: vec![0; n + 1],
        used: 0,
        done: false,
    })
}

impl LinearExtensions {
    fn pop(&mut self) {
        if let Some(x) = self.prefix.pop() {
            self.used &= !(1 << x);
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = self.prefix.clone();
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                return Some(out);
            }
            let start = self.next_try[depth];
            let found = (start..self.n)
                .find(|&c| self.used >> c & 1 == 0 && self.below[c] & !self.used == 0);
            match found {
                Some(c) => {
                    self.next_try[depth] = c + 1;
                    self.prefix.push(c);
                    self.used |= 1 << c;
                    self.next_try[depth + 1] = 0;
                }
                None => {
                    if depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pop();
                }
            }
        }
    }
}

/// Number of linear extensions, as maximal chains of the ideal lattice.
pub fn count_linear_extensions(p: &Poset) -> Result<BigUint> {
    let lattice = ideal_lattice(p)?;
    let mut e = vec![BigUint::zero(); lattice.len()];
    e[lattice.bottom()] = BigUint::one();
    // ideals are sorted by size, so lower covers come first
    let mut lower_covers: Vec<Vec<usize>> = vec![Vec::new(); lattice.len()];
    for (upper, lower, _) in lattice.cover_pairs() {
        lower_covers[upper].push(lower);
    }
    for j in 1..lattice.len() {
        let total = lower_covers[j].iter().fold(BigUint::zero(), |acc, &l| acc + &e[l]);
        e[j] = total;
    }
    Ok(e[lattice.top()].clone())
}
