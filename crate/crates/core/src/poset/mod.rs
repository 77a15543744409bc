//! Finite posets on `0..n`, the constructors used throughout the crate,
//! order ideals, linear extensions and isomorphism-free enumeration.

mod canonical;
mod enumerate;
mod extensions;
mod ideals;

pub use canonical::{canonical_form, canonical_form_hex, CANONICAL_MAX};
pub use enumerate::{enumerate_posets, enumerate_with_forms, ENUMERATE_MAX};
pub use extensions::{
    count_linear_extensions, linear_extensions, linear_extensions_bounded, LinearExtensions,
    LINEAR_EXTENSIONS_MAX,
};
pub use ideals::{ideal_lattice, ideal_lattice_bounded, IdealLattice, IDEAL_LATTICE_MAX};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset with elements `0..n`.
///
/// The full relation is stored as a dense `n x n` matrix, validated on
/// construction; `covers` is always its transitive reduction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

/// On-disk form: `{"n": 4, "covers": [[0, 1], [1, 2], [1, 3]]}` where each
/// pair `[a, b]` means `a < b`. Non-cover pairs are accepted and reduced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
}

impl Poset {
    /// From a full `n x n` relation matrix (row-major, `leq[a * n + b]` means
    /// `a <= b`). Rejects anything that is not reflexive, antisymmetric and
    /// transitive.
    pub fn from_relation(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::InvalidPoset(format!(
                "relation matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        for a in 0..n {
            if !leq[a * n + a] {
                return Err(Error::InvalidPoset(format!("not reflexive at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::InvalidPoset(format!("not antisymmetric: {a} and {b}")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive: {a} <= {b} <= {c} but not {a} <= {c}"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_valid_relation(n, leq))
    }

    fn from_valid_relation(n: usize, leq: Vec<bool>) -> Self {
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a * n + b] {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]);
                if !between {
                    covers.push((a, b));
                }
            }
        }
        Poset { n, leq, covers }
    }

    /// Reflexive-transitive closure of the given strict relations.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("pair ({a}, {b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("pair ({a}, {a}) is not a strict relation")));
            }
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for a in 0..n {
                if !leq[a * n + k] {
                    continue;
                }
                for b in 0..n {
                    if leq[k * n + b] {
                        leq[a * n + b] = true;
                    }
                }
            }
        }
        Self::from_relation(n, leq)
    }

    pub fn from_file(file: &PosetFile) -> Result<Self> {
        let pairs: Vec<_> = file.covers.iter().map(|&[a, b]| (a, b)).collect();
        Self::from_covers(file.n, &pairs)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: PosetFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            n: self.n,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("poset file serializes")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Number of strict relations `a < b`.
    pub fn relation_count(&self) -> usize {
        self.leq.iter().filter(|&&x| x).count() - self.n
    }

    /// Bitmask of elements strictly below `x`. Requires `n <= 64`.
    pub fn below_mask(&self, x: usize) -> u64 {
        debug_assert!(self.n <= 64);
        (0..self.n).filter(|&y| self.lt(y, x)).fold(0, |m, y| m | 1 << y)
    }

    /// Bitmask of elements strictly above `x`. Requires `n <= 64`.
    pub fn above_mask(&self, x: usize) -> u64 {
        debug_assert!(self.n <= 64);
        (0..self.n).filter(|&y| self.lt(x, y)).fold(0, |m, y| m | 1 << y)
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let order = self.topological_order();
        let mut h = vec![0; self.n];
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[..i] {
                if self.lt(y, x) {
                    h[x] = h[x].max(h[y] + 1);
                }
            }
        }
        h
    }

    /// A linear extension: elements sorted by number of predecessors, which
    /// is strictly increasing along `<`.
    pub fn topological_order(&self) -> Vec<usize> {
        let below: Vec<usize> = (0..self.n)
            .map(|x| (0..self.n).filter(|&y| self.lt(y, x)).count())
            .collect();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (below[x], x));
        order
    }

    /// Relabels so that element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidPoset("relabeling is not a permutation".into()));
        }
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        Ok(Self::from_valid_relation(n, leq))
    }

    /// The order dual: `a <= b` becomes `b <= a`.
    pub fn dual(&self) -> Self {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[b * n + a] = self.leq(a, b);
            }
        }
        Self::from_valid_relation(n, leq)
    }

    /// Every element of `self` below every element of `other`; `other`'s
    /// elements are shifted by `self.len()`.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        let (np, nq) = (self.n, other.n);
        let n = np + nq;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = match (a < np, b < np) {
                    (true, true) => self.leq(a, b),
                    (false, false) => other.leq(a - np, b - np),
                    (true, false) => true,
                    (false, true) => false,
                };
            }
        }
        Self::from_valid_relation(n, leq)
    }

    /// Disjoint union, `other` shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let (np, nq) = (self.n, other.n);
        let n = np + nq;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = match (a < np, b < np) {
                    (true, true) => self.leq(a, b),
                    (false, false) => other.leq(a - np, b - np),
                    _ => false,
                };
            }
        }
        Self::from_valid_relation(n, leq)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

pub fn make_antichain(k: usize) -> Poset {
    Poset::from_covers(k, &[]).expect("antichain is a poset")
}

/// Total order `0 < 1 < ... < k-1`. `k = 0` gives the empty poset.
pub fn make_chain(k: usize) -> Poset {
    let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Poset::from_covers(k, &covers).expect("chain is a poset")
}

/// One minimal element `0` covered by `k` pairwise incomparable elements.
pub fn make_qk(k: usize) -> Poset {
    let n = k + 1;
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
        leq[a] = true;
    }
    Poset {
        n,
        leq,
        covers: (1..n).map(|b| (0, b)).collect(),
    }
}

pub fn ordinal_sum(p: &Poset, q: &Poset) -> Poset {
    p.ordinal_sum(q)
}

/// An `m`-antichain placed entirely below an `n`-antichain.
pub fn make_pmn(m: usize, n: usize) -> Poset {
    make_antichain(m).ordinal_sum(&make_antichain(n))
}

/// Ordinal sum of antichains of the given sizes, bottom first.
pub fn make_antichain_sum(parts: &[usize]) -> Poset {
    parts
        .iter()
        .fold(make_antichain(0), |acc, &k| acc.ordinal_sum(&make_antichain(k)))
}
