use std::cmp::Ordering;

use super::Poset;
use crate::error::{Error, Result};

pub const CANONICAL_MAX: usize = 9;

/// Canonical byte string of a poset: equal for two posets exactly when they
/// are isomorphic.
///
/// Elements are first coloured by `(#below, #above, height)` and the
/// colouring is refined by the colours of neighbours until stable. Among the
/// labelings that list elements in colour order, the one whose strict
/// relation bits are lexicographically smallest wins. Bits are emitted so
/// that fixing the first `p` positions fixes a prefix, which lets the search
/// prune against the best labeling found so far.
///
/// Layout: `[n, packed bits...]`, bits most-significant first.
pub fn canonical_form(p: &Poset) -> Result<Vec<u8>> {
    let n = p.len();
    if n > CANONICAL_MAX {
        return Err(Error::bound("canonical form", n, CANONICAL_MAX));
    }
    let colours = refine(p);
    let mut slots: Vec<usize> = colours.clone();
    slots.sort_unstable();

    let mut search = Search {
        p,
        colours: &colours,
        slots: &slots,
        assigned: Vec::with_capacity(n),
        cur: Vec::with_capacity(n * n),
        best: None,
    };
    search.run(0);
    let bits = search.best.expect("at least one labeling");

    let mut out = vec![n as u8];
    for chunk in bits.chunks(8) {
        let byte = chunk.iter().enumerate().fold(0u8, |b, (i, &bit)| b | (bit as u8) << (7 - i));
        out.push(byte);
    }
    Ok(out)
}

pub fn canonical_form_hex(p: &Poset) -> Result<String> {
    Ok(canonical_form(p)?.iter().map(|b| format!("{b:02x}")).collect())
}

/// Iterated colour refinement seeded with degree and height.
fn refine(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let heights = p.heights();
    let below: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| p.lt(y, x)).collect()).collect();
    let above: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| p.lt(x, y)).collect()).collect();

    let seed: Vec<Vec<usize>> = (0..n)
        .map(|x| vec![below[x].len(), above[x].len(), heights[x]])
        .collect();
    let mut colours = rank(&seed);
    loop {
        let keys: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let mut down: Vec<usize> = below[x].iter().map(|&y| colours[y]).collect();
                let mut up: Vec<usize> = above[x].iter().map(|&y| colours[y]).collect();
                down.sort_unstable();
                up.sort_unstable();
                let mut key = vec![colours[x], down.len()];
                key.extend(down);
                key.extend(up);
                key
            })
            .collect();
        let next = rank(&keys);
        let count = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if count(&next) == count(&colours) {
            return next;
        }
        colours = next;
    }
}

fn rank(keys: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = keys.iter().collect();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(&k).expect("key present"))
        .collect()
}

struct Search<'a> {
    p: &'a Poset,
    colours: &'a [usize],
    slots: &'a [usize],
    assigned: Vec<usize>,
    cur: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        let n = self.p.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        for x in 0..n {
            if self.colours[x] != self.slots[pos] || self.assigned.contains(&x) {
                continue;
            }
            let mark = self.cur.len();
            for &y in &self.assigned {
                self.cur.push(self.p.lt(y, x));
                self.cur.push(self.p.lt(x, y));
            }
            let keep = match &self.best {
                Some(b) => self.cur.as_slice().cmp(&b[..self.cur.len()]) != Ordering::Greater,
                None => true,
            };
            if keep {
                self.assigned.push(x);
                self.run(pos + 1);
                self.assigned.pop();
            }
            self.cur.truncate(mark);
        }
    }
}
