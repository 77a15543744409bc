use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use orderpoly::bernoulli::bernoulli_number;
use orderpoly::ehrhart::{
    ehrhart_by_counting, ehrhart_by_hstar, ehrhart_pmn, ehrhart_qk_closed_form, hstar_from_ehrhart,
    run_table1, EhrhartPolynomial,
};
use orderpoly::poset::{Poset, ENUMERATE_MAX};
use orderpoly::positivity::{counterexample_for_dimension, sign_report, Counterexample};
use orderpoly::scan::{scan_antichain_sums, scan_posets_of_size, ScanResult};
use serde_json::json;

/// Ehrhart polynomials of order polytopes, computed exactly.
#[derive(Debug, Parser)]
#[command(name = "orderpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bernoulli numbers B_0..B_N (B_1 = +1/2).
    Bernoulli {
        #[arg(long)]
        max: usize,
    },
    /// Ehrhart polynomial of the order polytope of a poset file.
    Ehrhart {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Closed form for Q_k: one element below an antichain of k.
    Qk {
        #[arg(long)]
        k: usize,
    },
    /// Ordinal sum of antichains of sizes m and n.
    Pmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Coefficient signs of the Ehrhart polynomial of Q_k.
    Signs {
        #[arg(long)]
        k: usize,
    },
    /// A known order polytope of dimension D with a negative coefficient.
    Counterexample {
        #[arg(long)]
        dim: usize,
    },
    /// Check every poset class with at most N elements.
    Scan {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// Check every ordinal sum of antichains with T elements in total.
    ScanAntichainSums {
        #[arg(long)]
        total: usize,
    },
    /// Recompute the stored P_{m,n} fixtures and diff them.
    Table1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Counting,
    Hstar,
    Auto,
}

/// Whether the command found a violation or mismatch.
enum Outcome {
    Clean,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &mut impl Write, value: &serde_json::Value) -> Result<()> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn ehrhart_json(e: &EhrhartPolynomial) -> Result<serde_json::Value> {
    let h = hstar_from_ehrhart(e)?;
    Ok(json!({
        "dim": e.dim(),
        "coefficients": e.coefficients(),
        "h_star": h.to_strings(),
        "method": e.method(),
    }))
}

fn scan_line(r: &ScanResult) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(r)?)
}

fn run(command: Command) -> Result<Outcome> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Bernoulli { max } => {
            for n in 0..=max {
                emit(&mut out, &json!({ "n": n, "B": bernoulli_number(n) }))?;
            }
        }
        Command::Ehrhart { poset, method } => {
            let text = std::fs::read_to_string(&poset)
                .with_context(|| format!("reading {}", poset.display()))?;
            let p = Poset::from_json(&text)?;
            let e = match method {
                MethodArg::Counting | MethodArg::Auto => ehrhart_by_counting(&p)?,
                MethodArg::Hstar => ehrhart_by_hstar(&p)?,
            };
            emit(&mut out, &ehrhart_json(&e)?)?;
        }
        Command::Qk { k } => emit(&mut out, &ehrhart_json(&ehrhart_qk_closed_form(k))?)?,
        Command::Pmn { m, n } => emit(&mut out, &ehrhart_json(&ehrhart_pmn(m, n)?)?)?,
        Command::Signs { k } => {
            let report = sign_report(&ehrhart_qk_closed_form(k));
            emit(&mut out, &serde_json::to_value(&report)?)?;
        }
        Command::Counterexample { dim } => {
            let line = match counterexample_for_dimension(dim)? {
                Counterexample::Found { family, poset, ehrhart, report } => json!({
                    "dim": dim,
                    "status": "found",
                    "family": family,
                    "poset": poset.to_file(),
                    "coefficients": ehrhart.coefficients(),
                    "report": report,
                }),
                Counterexample::Unknown => json!({ "dim": dim, "status": "unknown" }),
                Counterexample::NoneUpToProvenBound => json!({ "dim": dim, "status": "none" }),
            };
            emit(&mut out, &line)?;
        }
        Command::Scan { n_max, shards } => {
            if n_max > ENUMERATE_MAX {
                return Err(orderpoly::Error::ScanTooLarge { requested: n_max, bound: ENUMERATE_MAX }.into());
            }
            if n_max == ENUMERATE_MAX {
                eprintln!("warning: n = {n_max} has 16999 classes and may take hours");
            }
            let mut clean = true;
            for n in 1..=n_max {
                let r = scan_posets_of_size(n, shards)?;
                eprintln!(
                    "n = {n}: {} classes, {} violations, {:.2?}",
                    r.classes_scanned,
                    r.violations.len(),
                    r.elapsed
                );
                clean &= r.is_clean();
                emit(&mut out, &scan_line(&r)?)?;
            }
            return Ok(if clean { Outcome::Clean } else { Outcome::Violation });
        }
        Command::ScanAntichainSums { total } => {
            let r = scan_antichain_sums(total)?;
            eprintln!(
                "total = {total}: {} compositions, {} violations, {:.2?}",
                r.classes_scanned,
                r.violations.len(),
                r.elapsed
            );
            emit(&mut out, &scan_line(&r)?)?;
            return Ok(if r.is_clean() { Outcome::Clean } else { Outcome::Violation });
        }
        Command::Table1 => {
            let report = run_table1()?;
            for row in &report.rows {
                let e = ehrhart_pmn(row.m, row.n)?;
                emit(
                    &mut out,
                    &json!({
                        "m": row.m,
                        "n": row.n,
                        "coefficients": e.coefficients(),
                        "matches": row.matches,
                        "mismatches": row.mismatches,
                    }),
                )?;
            }
            emit(&mut out, &json!({ "matched": report.matched, "total": report.total }))?;
            return Ok(if report.all_match() { Outcome::Clean } else { Outcome::Violation });
        }
    }
    Ok(Outcome::Clean)
}
