//! The bundled verification battery run by `nonassoc verify`.
//!
//! Every check compares two independent routes to the same quantity. The
//! closed forms under test are passed in through [`Formulas`] so a broken
//! formula can be injected and must be reported by name.

use std::fmt::Write as _;

use crate::admissible::{
    admissible_to_tree, enumerate_admissible, is_admissible, ADMISSIBLE_SCAN_CAP,
};
use crate::double_minus::{
    a000975, count_distinct_bruteforce, count_formula, refined_count_formula,
    refined_counts_bruteforce, sign_parity, A000975Method,
};
use crate::generic_op::{count_distinct_generic, LinearOp};
use crate::num::pow2;
use crate::series::{cprime, cprime_closed, gf_coeffs, skipping_sum_closed, skipping_sum_direct};
use crate::tree::{enumerate_trees, EnumCap};
use crate::{Count, Result, SignedCount};

/// Range of `n` for the arithmetic-only recurrence checks.
pub const RECURRENCE_MAX_N: usize = 512;
/// Range of `n` for the skipping-sum and `C'` direct sums.
pub const SKIPPING_MAX_N: usize = 64;

/// Closed forms checked against the brute-force oracles.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub count: fn(usize) -> Count,
    pub refined: fn(usize, usize) -> Result<Count>,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            count: count_formula::<Count>,
            refined: refined_count_formula::<Count>,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag}  {:<40} {}", c.name, c.detail).unwrap();
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "{passed}/{} checks passed", self.checks.len()).unwrap();
        out
    }
}

/// `Ok(detail)` on success, `Err(first failure)` otherwise.
type Outcome = std::result::Result<String, String>;

fn record(report: &mut Report, name: &'static str, outcome: Result<Outcome>) -> Result<()> {
    let (passed, detail) = match outcome? {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    report.checks.push(CheckResult {
        name,
        passed,
        detail,
    });
    Ok(())
}

pub fn run_checks(max_n: usize, cap: EnumCap, f: &Formulas) -> Result<Report> {
    cap.check(max_n)?;
    let mut report = Report::default();
    record(
        &mut report,
        "brute-force vs closed-form count",
        brute_vs_count(max_n, cap, f),
    )?;
    record(
        &mut report,
        "refined counts vs closed form",
        brute_vs_refined(max_n, cap, f),
    )?;
    record(
        &mut report,
        "refinement identity (row sums)",
        refinement(max_n, cap, f),
    )?;
    record(
        &mut report,
        "leaf-depth properties over all trees",
        depth_properties(max_n, cap),
    )?;
    record(
        &mut report,
        "admissible sequence cardinality",
        admissible_count(max_n, f),
    )?;
    record(
        &mut report,
        "admissible witness roundtrip",
        admissible_roundtrip(max_n),
    )?;
    record(&mut report, "skipping sum via Z[ω]", Ok(skipping()))?;
    record(
        &mut report,
        "A000975 characterizations agree",
        Ok(characterizations(f)),
    )?;
    record(&mut report, "C(n) + C(n-1) + 1 = 2^n", Ok(complement(f)))?;
    record(&mut report, "C'(n) closed form", Ok(cprime_identity(f)))?;
    record(
        &mut report,
        "generating function coefficients",
        Ok(generating_function(f)),
    )?;
    record(
        &mut report,
        "double minus as a linear operation",
        generic(max_n, cap, f),
    )?;
    Ok(report)
}

fn brute_vs_count(max_n: usize, cap: EnumCap, f: &Formulas) -> Result<Outcome> {
    for n in 0..=max_n {
        let brute = count_distinct_bruteforce(n, cap)?;
        let formula = (f.count)(n);
        if brute != formula {
            return Ok(Err(format!(
                "n={n}: brute force {brute}, formula {formula}"
            )));
        }
    }
    Ok(Ok(format!("n=0..={max_n}")))
}

fn brute_vs_refined(max_n: usize, cap: EnumCap, f: &Formulas) -> Result<Outcome> {
    for n in 1..=max_n {
        let row = refined_counts_bruteforce(n, cap)?;
        for (r, brute) in row.iter().enumerate() {
            let formula = (f.refined)(n, r)?;
            if *brute != formula {
                return Ok(Err(format!(
                    "n={n}, r={r}: brute force {brute}, formula {formula}"
                )));
            }
        }
    }
    Ok(Ok(format!("n=1..={max_n}, all r")))
}

fn refinement(max_n: usize, cap: EnumCap, f: &Formulas) -> Result<Outcome> {
    for n in 0..=max_n {
        let sum: Count = refined_counts_bruteforce(n, cap)?.iter().sum();
        let total = (f.count)(n);
        if sum != total {
            return Ok(Err(format!("n={n}: row sum {sum}, count {total}")));
        }
    }
    Ok(Ok(format!("n=0..={max_n}")))
}

fn depth_properties(max_n: usize, cap: EnumCap) -> Result<Outcome> {
    let mut trees = 0u64;
    for n in 0..=max_n {
        for t in enumerate_trees(n, cap)? {
            let d = t.depth_sequence();
            let p = sign_parity(&t);
            if (n + p.zeros()) % 3 != 1 {
                return Ok(Err(format!("{t:?}: n + r ≢ 1 (mod 3)")));
            }
            if n >= 1 && !d.has_equal_adjacent() {
                return Ok(Err(format!("{t:?}: no adjacent equal depths")));
            }
            if !d.kraft_is_one() {
                return Ok(Err(format!("{t:?}: Kraft sum ≠ 1")));
            }
            if !is_admissible(&p)? {
                return Ok(Err(format!("{t:?}: parity {p} not admissible")));
            }
            trees += 1;
        }
    }
    Ok(Ok(format!("{trees} trees, n=0..={max_n}")))
}

fn admissible_count(max_n: usize, f: &Formulas) -> Result<Outcome> {
    let top = max_n.min(ADMISSIBLE_SCAN_CAP);
    for n in 1..=top {
        let count = Count::from(enumerate_admissible(n)?.count());
        let formula = (f.count)(n);
        if count != formula {
            return Ok(Err(format!(
                "n={n}: {count} admissible sequences, formula {formula}"
            )));
        }
    }
    Ok(Ok(format!("n=1..={top}")))
}

fn admissible_roundtrip(max_n: usize) -> Result<Outcome> {
    let top = max_n.min(ADMISSIBLE_SCAN_CAP);
    let mut seqs = 0u64;
    for n in 0..=top {
        for seq in enumerate_admissible(n)? {
            let t = admissible_to_tree(&seq)?;
            if sign_parity(&t) != seq || t.size() != n {
                return Ok(Err(format!(
                    "{seq}: witness {t:?} has parity {}",
                    sign_parity(&t)
                )));
            }
            seqs += 1;
        }
    }
    Ok(Ok(format!("{seqs} sequences, n=0..={top}")))
}

fn skipping() -> Outcome {
    for n in 0..=SKIPPING_MAX_N {
        for k in 0..3 {
            let direct = skipping_sum_direct::<SignedCount>(n, k);
            let closed = skipping_sum_closed::<SignedCount>(n, k);
            if direct != closed {
                return Err(format!("n={n}, k={k}: direct {direct}, closed {closed}"));
            }
        }
    }
    Ok(format!("n=0..={SKIPPING_MAX_N}, k=0,1,2"))
}

fn characterizations(f: &Formulas) -> Outcome {
    for n in 1..=RECURRENCE_MAX_N {
        let reference = (f.count)(n);
        for m in A000975Method::ALL {
            let v: Count = a000975(n, m).expect("n ≥ 1");
            if v != reference {
                return Err(format!("n={n}: {m} gives {v}, count formula {reference}"));
            }
        }
    }
    Ok(format!("6 methods, n=1..={RECURRENCE_MAX_N}"))
}

fn complement(f: &Formulas) -> Outcome {
    for n in 2..=RECURRENCE_MAX_N {
        let lhs = (f.count)(n) + (f.count)(n - 1) + 1u8;
        if lhs != pow2::<Count>(n) {
            return Err(format!("n={n}: C(n) + C(n-1) + 1 = {lhs}"));
        }
    }
    Ok(format!("n=2..={RECURRENCE_MAX_N}"))
}

fn cprime_identity(f: &Formulas) -> Outcome {
    for n in 1..=RECURRENCE_MAX_N {
        let shifted = (f.count)(n) + u8::from(n.is_multiple_of(2));
        let closed = cprime_closed::<Count>(n);
        if shifted != closed {
            return Err(format!("n={n}: C'(n) = {shifted}, closed form {closed}"));
        }
        if n <= SKIPPING_MAX_N {
            let direct = cprime::<Count>(n);
            if direct != closed {
                return Err(format!(
                    "n={n}: binomial sum {direct}, closed form {closed}"
                ));
            }
        }
    }
    Ok(format!("n=1..={RECURRENCE_MAX_N}"))
}

fn generating_function(f: &Formulas) -> Outcome {
    let coeffs = gf_coeffs::<Count>(31);
    for (n, c) in coeffs.iter().enumerate() {
        let expected = (f.count)(n + 1);
        if *c != expected {
            return Err(format!("x^{n}: coefficient {c}, C(n+1) = {expected}"));
        }
    }
    Ok("c_n = C(n+1), n=0..=30".into())
}

fn generic(max_n: usize, cap: EnumCap, f: &Formulas) -> Result<Outcome> {
    for n in 0..=max_n {
        let generic = count_distinct_generic(LinearOp::DOUBLE_MINUS, n, cap)?;
        let formula = (f.count)(n);
        if generic != formula {
            return Ok(Err(format!(
                "n={n}: exponent classes {generic}, formula {formula}"
            )));
        }
    }
    Ok(Ok(format!("n=0..={max_n}")))
}
