//! The refined triangle `C_{⊖,n,r}` and its text serializations.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Zero;

use crate::double_minus::{refined_count_formula, refined_counts_bruteforce};
use crate::tree::EnumCap;
use crate::{Count, Error, Result};

/// Largest `max_n` accepted for formula-built tables.
pub const MAX_FORMULA_TABLE_N: usize = 10_000;

/// Row `n` holds `C_{⊖,n,r}` for `r = 0..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<Vec<Count>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Row 0 is fixed by the single-leaf tree: one result, `+x0`.
fn row_zero() -> Vec<Count> {
    vec![Count::zero(), Count::from(1u8)]
}

impl CountTable {
    pub fn from_rows(rows: Vec<Vec<Count>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 2, "row {n} must have n + 2 entries");
        }
        CountTable { rows }
    }

    /// Closed-form table for `n ≥ 1`, with the single-leaf row prepended.
    pub fn from_formula(max_n: usize) -> Self {
        let mut rows = vec![row_zero()];
        for n in 1..=max_n {
            rows.push(
                (0..=n + 1)
                    .map(|r| refined_count_formula::<Count>(n, r).expect("r in range"))
                    .collect(),
            );
        }
        CountTable { rows }
    }

    pub fn from_bruteforce(max_n: usize, cap: EnumCap) -> Result<Self> {
        cap.check(max_n)?;
        let rows = (0..=max_n)
            .map(|n| refined_counts_bruteforce(n, cap))
            .collect::<Result<Vec<_>>>()?;
        Ok(CountTable { rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[Count]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, r: usize) -> Option<&Count> {
        self.rows.get(n).and_then(|row| row.get(r))
    }

    pub fn row_sum(&self, n: usize) -> Count {
        self.rows[n].iter().sum()
    }

    /// Nonzero cells as `(n, r, count)`, row-major.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Count)> {
        self.rows.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(r, c)| (n, r, c))
        })
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Markdown => self.to_markdown(),
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,count\n");
        for (n, r, c) in self.triples() {
            writeln!(out, "{n},{r},{c}").unwrap();
        }
        out
    }

    /// Rows indexed by `n`, columns by `r = 0..=max_n+1`; zero cells blank.
    pub fn to_markdown(&self) -> String {
        let width = self.max_n() + 2;
        let mut out = String::from("| n \\ r |");
        for r in 0..width {
            write!(out, " {r} |").unwrap();
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(width));
        out.push('\n');
        for (n, row) in self.rows.iter().enumerate() {
            write!(out, "| {n} |").unwrap();
            for r in 0..width {
                match row.get(r).filter(|c| !c.is_zero()) {
                    Some(c) => write!(out, " {c} |").unwrap(),
                    None => out.push_str("  |"),
                }
            }
            out.push('\n');
        }
        out
    }

    /// `{"n": {"r": count, ...}, ...}` with nonzero cells only; counts are
    /// bare JSON integers of arbitrary length.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        for (n, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| format!("\"{r}\": {c}"))
                .collect();
            let sep = if n + 1 < self.rows.len() { "," } else { "" };
            writeln!(out, "  \"{n}\": {{{}}}{sep}", cells.join(", ")).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
