use std::collections::BTreeMap;

use super::{canonical_form, ideal_lattice, Poset};
use crate::error::{Error, Result};

pub const ENUMERATE_MAX: usize = 8;

/// One poset per isomorphism class on `n` elements, ordered by canonical
/// form.
pub fn enumerate_posets(n: usize) -> Result<impl Iterator<Item = Poset>> {
    Ok(enumerate_with_forms(n)?.into_iter().map(|(_, p)| p))
}

/// Like [`enumerate_posets`], paired with each representative's canonical
/// form.
///
/// Classes on `n` elements are grown from classes on `n - 1` by adding a new
/// maximal element whose strict down-set is any order ideal. Every poset has
/// a maximal element, so deleting it shows every class is reached.
pub fn enumerate_with_forms(n: usize) -> Result<Vec<(Vec<u8>, Poset)>> {
    if n > ENUMERATE_MAX {
        return Err(Error::bound("poset enumeration", n, ENUMERATE_MAX));
    }
    let empty = Poset::from_covers(0, &[])?;
    let mut level: BTreeMap<Vec<u8>, Poset> = BTreeMap::new();
    level.insert(canonical_form(&empty)?, empty);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for parent in level.values() {
            for child in children(parent)? {
                let form = canonical_form(&child)?;
                next.entry(form).or_insert(child);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

fn children(p: &Poset) -> Result<Vec<Poset>> {
    let m = p.len();
    let lattice = ideal_lattice(p)?;
    let n = m + 1;
    let mut out = Vec::with_capacity(lattice.len());
    for &ideal in lattice.ideals() {
        let mut leq = vec![false; n * n];
        for a in 0..m {
            for b in 0..m {
                leq[a * n + b] = p.leq(a, b);
            }
            leq[a * n + m] = ideal >> a & 1 == 1;
        }
        leq[m * n + m] = true;
        out.push(Poset::from_valid_relation(n, leq));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_posets(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn forms_are_sorted_and_match() {
        let all = enumerate_with_forms(4).unwrap();
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));
        for (form, p) in &all {
            assert_eq!(&canonical_form(p).unwrap(), form);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_posets(9), Err(Error::BoundExceeded { .. })));
    }
}
