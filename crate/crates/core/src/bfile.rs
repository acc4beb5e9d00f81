//! OEIS b-file parsing and comparison against computed counts.
//!
//! Grammar: optional `#` comment lines, blank lines, and data lines
//! `<index><whitespace><value>`. Indices must strictly increase.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::double_minus::count_formula;
use crate::{Count, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: BTreeMap<u64, BigInt>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut last: Option<u64> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| Error::BFileParse {
                line: line_no,
                message,
            };
            let line = raw.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `<index> <value>`, got {line:?}")));
            };
            if line.starts_with(char::is_whitespace) {
                return Err(err("leading whitespace".into()));
            }
            let idx: u64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
            let val: BigInt = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
            if let Some(prev) = last {
                if idx <= prev {
                    return Err(err(format!(
                        "index {idx} does not increase (previous {prev})"
                    )));
                }
            }
            last = Some(idx);
            entries.insert(idx, val);
        }
        Ok(BFile { entries })
    }

    pub fn get(&self, n: u64) -> Option<&BigInt> {
        self.entries.get(&n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Comparison {
    pub checked: usize,
    pub matched: usize,
    /// `(n, b-file value, computed value)`.
    pub mismatches: Vec<(u64, BigInt, Count)>,
    pub missing: Vec<u64>,
}

impl Comparison {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty() && self.missing.is_empty()
    }

    pub fn report(&self) -> String {
        let mut out = String::new();
        for (n, expected, got) in &self.mismatches {
            out.push_str(&format!(
                "mismatch at n={n}: b-file {expected}, computed {got}\n"
            ));
        }
        for n in &self.missing {
            out.push_str(&format!("missing index n={n}\n"));
        }
        out.push_str(&format!("{}/{} match\n", self.matched, self.checked));
        out
    }
}

/// Compares `a(n)` with the distinct-result count for `1 ≤ n ≤ max_n`.
/// The b-file's `a(0) = 0` is not compared: the count for a single operand is 1.
pub fn compare_a000975(bfile: &BFile, max_n: u64) -> Comparison {
    let mut cmp = Comparison::default();
    for n in 1..=max_n {
        cmp.checked += 1;
        let Some(expected) = bfile.get(n) else {
            cmp.missing.push(n);
            continue;
        };
        let got: Count = count_formula(n as usize);
        if expected.to_biguint().as_ref() == Some(&got) {
            cmp.matched += 1;
        } else {
            cmp.mismatches.push((n, expected.clone(), got));
        }
    }
    cmp
}
