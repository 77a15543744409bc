//! Stored Ehrhart polynomials of `O_{P_{m,n}}` for `(m, n)` in
//! `{(6,6), (6,7), (7,7), ..., (10,10)}` and a coefficient-level diff
//! against fresh computation.

use serde::{Deserialize, Serialize};

use super::ehrhart_pmn;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

const FIXTURES: &str = include_str!("../../data/table1.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub m: usize,
    pub n: usize,
    /// Ascending degree, `m + n + 1` entries.
    pub coefficients: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Mismatch {
    pub degree: usize,
    pub expected: Option<Rational>,
    pub actual: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1RowResult {
    pub m: usize,
    pub n: usize,
    pub matches: bool,
    pub mismatches: Vec<Table1Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub rows: Vec<Table1RowResult>,
    pub matched: usize,
    pub total: usize,
}

impl Table1Report {
    pub fn all_match(&self) -> bool {
        self.matched == self.total
    }
}

pub fn table1_fixtures() -> Result<Vec<Table1Row>> {
    serde_json::from_str(FIXTURES).map_err(|e| Error::Parse(format!("table1 fixtures: {e}")))
}

pub fn run_table1() -> Result<Table1Report> {
    run_table1_against(&table1_fixtures()?)
}

/// Recomputes each row through the Eulerian-product route and diffs it
/// against `fixtures` degree by degree.
pub fn run_table1_against(fixtures: &[Table1Row]) -> Result<Table1Report> {
    let mut rows = Vec::with_capacity(fixtures.len());
    for row in fixtures {
        let computed = ehrhart_pmn(row.m, row.n)?;
        let actual = computed.coefficients();
        let len = actual.len().max(row.coefficients.len());
        let mismatches: Vec<_> = (0..len)
            .filter_map(|degree| {
                let expected = row.coefficients.get(degree).cloned();
                let actual = actual.get(degree).cloned();
                (expected != actual).then_some(Table1Mismatch { degree, expected, actual })
            })
            .collect();
        rows.push(Table1RowResult {
            m: row.m,
            n: row.n,
            matches: mismatches.is_empty(),
            mismatches,
        });
    }
    let matched = rows.iter().filter(|r| r.matches).count();
    Ok(Table1Report { total: rows.len(), matched, rows })
}
