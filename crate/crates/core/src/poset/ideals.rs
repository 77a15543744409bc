use super::Poset;
use crate::error::{Error, Result};

/// Default cap on poset size for ideal-lattice construction.
pub const IDEAL_LATTICE_MAX: usize = 21;

/// All order ideals of a poset, as bitmasks, with the covering relation of
/// the lattice they form under inclusion.
///
/// Ideals are sorted by `(size, mask)`, so index 0 is the empty ideal and the
/// last index is the full set.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    n: usize,
    ideals: Vec<u32>,
    /// A linear extension of the poset; `steps[i]` belongs to `order[i]`.
    order: Vec<usize>,
    /// `steps[i]` lists `(upper, lower)` ideal indices with
    /// `upper = lower + {order[i]}`.
    steps: Vec<Vec<(u32, u32)>>,
}

pub fn ideal_lattice(p: &Poset) -> Result<IdealLattice> {
    ideal_lattice_bounded(p, IDEAL_LATTICE_MAX)
}

pub fn ideal_lattice_bounded(p: &Poset, bound: usize) -> Result<IdealLattice> {
    let n = p.len();
    // masks are u32 and the index table has 2^n slots
    let bound = bound.min(26);
    if n > bound {
        return Err(Error::bound("ideal lattice", n, bound));
    }
    let order = p.topological_order();
    let below: Vec<u32> = (0..n).map(|x| p.below_mask(x) as u32).collect();
    let above: Vec<u32> = (0..n).map(|x| p.above_mask(x) as u32).collect();

    // Decide elements in linear-extension order; an element may join once
    // everything below it has.
    let mut ideals = Vec::new();
    let mut stack = vec![(0usize, 0u32)];
    while let Some((depth, mask)) = stack.pop() {
        if depth == n {
            ideals.push(mask);
            continue;
        }
        let x = order[depth];
        stack.push((depth + 1, mask));
        if below[x] & !mask == 0 {
            stack.push((depth + 1, mask | 1 << x));
        }
    }
    ideals.sort_unstable_by_key(|&m| (m.count_ones(), m));

    let mut index = vec![u32::MAX; 1usize << n];
    for (i, &m) in ideals.iter().enumerate() {
        index[m as usize] = i as u32;
    }

    let mut steps = vec![Vec::new(); n];
    for (pos, &x) in order.iter().enumerate() {
        let bit = 1u32 << x;
        for (i, &m) in ideals.iter().enumerate() {
            // x is maximal in m exactly when nothing above x is in m
            if m & bit != 0 && m & above[x] == 0 {
                let lower = index[(m & !bit) as usize];
                debug_assert_ne!(lower, u32::MAX);
                steps[pos].push((i as u32, lower));
            }
        }
    }

    Ok(IdealLattice { n, ideals, order, steps })
}

impl IdealLattice {
    pub fn poset_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[u32] {
        &self.ideals
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn index_of(&self, mask: u32) -> Option<usize> {
        self.ideals.binary_search_by_key(&(mask.count_ones(), mask), |&m| (m.count_ones(), m)).ok()
    }

    pub fn contains(&self, lower: usize, upper: usize) -> bool {
        self.ideals[lower] & !self.ideals[upper] == 0
    }

    /// Covering pairs `(upper, lower)` of the lattice, grouped by the element
    /// that separates them.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.steps.iter().zip(&self.order).flat_map(|(pairs, &x)| {
            pairs.iter().map(move |&(u, l)| (u as usize, l as usize, x))
        })
    }

    pub fn cover_count(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }

    /// In-place zeta transform: `g[J] <- sum over ideals I subset of J of g[I]`.
    ///
    /// One sweep per element, in linear-extension order. The order matters:
    /// when element `x` is processed, no element above `x` has been, so
    /// `J - {x}` contributes only when it is itself an ideal.
    pub fn zeta<T>(&self, g: &mut [T])
    where
        T: Clone + for<'a> std::ops::AddAssign<&'a T>,
    {
        assert_eq!(g.len(), self.ideals.len());
        for pairs in &self.steps {
            for &(upper, lower) in pairs {
                let add = g[lower as usize].clone();
                g[upper as usize] += &add;
            }
        }
    }
}
