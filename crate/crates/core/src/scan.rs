//! Exhaustive positivity scans: every isomorphism class of small posets,
//! and every ordinal sum of antichains with a given total size.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::ehrhart::{
    ehrhart_by_counting, ehrhart_from_hstar, eulerian_polynomial, hstar_from_ehrhart,
    hstar_ordinal_sum, hstar_via_linear_extensions, HStarVector,
};
use crate::error::{Error, Result};
use crate::poset::{canonical_form_hex, enumerate_with_forms, make_antichain_sum, Poset, PosetFile, ENUMERATE_MAX};
use crate::positivity::{sign_report, SignReport};

/// Largest poset size for which the scan also recomputes h* from linear
/// extensions and compares.
pub const HSTAR_CROSSCHECK_MAX: usize = 6;
pub const ANTICHAIN_SUM_MAX: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanViolation {
    /// Hex canonical form for poset scans, `a+b+...` for antichain sums.
    pub key: String,
    pub poset: PosetFile,
    pub report: SignReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanResult {
    pub n: usize,
    pub classes_scanned: usize,
    pub violations: Vec<ScanViolation>,
    #[serde(with = "millis")]
    pub elapsed: Duration,
}

impl ScanResult {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Equality ignoring wall-clock time.
    pub fn same_content(&self, other: &ScanResult) -> bool {
        self.n == other.n
            && self.classes_scanned == other.classes_scanned
            && self.violations == other.violations
    }
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

/// One [`ScanResult`] per size `1..=n_max`.
pub fn scan_all_posets(n_max: usize, shards: usize) -> Result<Vec<ScanResult>> {
    if n_max > ENUMERATE_MAX {
        return Err(Error::ScanTooLarge { requested: n_max, bound: ENUMERATE_MAX });
    }
    (1..=n_max).map(|n| scan_posets_of_size(n, shards)).collect()
}

/// Scans every isomorphism class on `n` elements.
///
/// Representatives are dealt round-robin to `shards` worker threads. Each
/// worker checks its posets independently; violations are merged and sorted
/// by canonical form, so the result does not depend on `shards`.
pub fn scan_posets_of_size(n: usize, shards: usize) -> Result<ScanResult> {
    let start = Instant::now();
    let shards = shards.max(1);
    let classes = enumerate_with_forms(n)?;

    let per_shard: Vec<Result<Vec<ScanViolation>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..shards)
            .map(|w| {
                let classes = &classes;
                s.spawn(move || {
                    let mut found = Vec::new();
                    for (_, p) in classes.iter().skip(w).step_by(shards) {
                        if let Some(v) = check_poset(p)? {
                            found.push(v);
                        }
                    }
                    Ok(found)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
    });

    let mut violations = Vec::new();
    for shard in per_shard {
        violations.extend(shard?);
    }
    violations.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(ScanResult { n, classes_scanned: classes.len(), violations, elapsed: start.elapsed() })
}

fn check_poset(p: &Poset) -> Result<Option<ScanViolation>> {
    let e = ehrhart_by_counting(p)?;
    let h = hstar_from_ehrhart(&e)?;
    if p.len() <= HSTAR_CROSSCHECK_MAX {
        let via_extensions = hstar_via_linear_extensions(p)?;
        if via_extensions != h {
            return Err(Error::Invariant(format!(
                "h* mismatch for {}: counting {:?}, extensions {:?}",
                p.to_json(),
                h.entries(),
                via_extensions.entries()
            )));
        }
    }
    let report = sign_report(&e);
    report.check_invariants()?;
    if report.is_ehrhart_positive {
        return Ok(None);
    }
    Ok(Some(ScanViolation { key: canonical_form_hex(p)?, poset: p.to_file(), report }))
}

/// All compositions of `total`, in order of their cut-point bitmask.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (0..1u32 << (total - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..total - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// h* of the ordinal sum of antichains of sizes `parts`: the product of
/// Eulerian polynomials.
pub fn antichain_sum_hstar(parts: &[usize]) -> Result<HStarVector> {
    let mut h = HStarVector::from_i64(&[1])?;
    for &k in parts {
        h = hstar_ordinal_sum(&h, &eulerian_polynomial(k)?);
    }
    Ok(h)
}

pub fn antichain_sum_report(parts: &[usize]) -> Result<SignReport> {
    Ok(sign_report(&ehrhart_from_hstar(&antichain_sum_hstar(parts)?)?))
}

pub fn composition_key(parts: &[usize]) -> String {
    parts.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

/// Sign-checks every ordinal sum of antichains with `total` elements.
pub fn scan_antichain_sums(total: usize) -> Result<ScanResult> {
    if total == 0 || total > ANTICHAIN_SUM_MAX {
        return Err(Error::bound("antichain-sum scan", total, ANTICHAIN_SUM_MAX));
    }
    let start = Instant::now();
    let all = compositions(total);
    let mut flagged = Vec::new();
    for parts in &all {
        let report = antichain_sum_report(parts)?;
        report.check_invariants()?;
        if !report.is_ehrhart_positive {
            flagged.push((parts.clone(), report));
        }
    }
    flagged.sort_by(|a, b| a.0.cmp(&b.0));
    let violations = flagged
        .into_iter()
        .map(|(parts, report)| ScanViolation {
            key: composition_key(&parts),
            poset: make_antichain_sum(&parts).to_file(),
            report,
        })
        .collect();
    Ok(ScanResult { n: total, classes_scanned: all.len(), violations, elapsed: start.elapsed() })
}
