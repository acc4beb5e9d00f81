//! Command-line front end. [`run`] does all the work and returns the exit
//! code so the binary is a thin wrapper and commands are testable in-process.
//!
//! Exit codes: 0 success, 1 verification or comparison failure, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::admissible::{admissible_to_tree, enumerate_admissible, Admissibility};
use crate::bfile::{compare_a000975, BFile};
use crate::double_minus::{count_distinct_bruteforce, count_formula, ParitySeq};
use crate::generic_op::{count_distinct_generic, nonassociativity_depth, LinearOp};
use crate::series::{average_leaf_depth, gf_coeffs};
use crate::table::{CountTable, TableFormat, MAX_FORMULA_TABLE_N};
use crate::tree::{catalan, enumerate_trees, EnumCap};
use crate::verify::{run_checks, Formulas};
use crate::{Count, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nonassoc",
    version,
    about = "Count distinct parenthesizations of x0 ⊖ x1 ⊖ ... ⊖ xn with a ⊖ b = -a - b"
)]
pub struct Cli {
    /// Largest n for which trees are enumerated (overrides NONASSOC_ENUM_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Brute,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Render {
    Expr,
    Bits,
    Depths,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of distinct results for n + 1 operands.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: CountMethod,
    },
    /// The triangle of counts by number of plus signs.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "md", value_parser = parse_format)]
        format: TableFormat,
        #[arg(long, value_enum, default_value = "formula")]
        method: CountMethod,
    },
    /// Run every cross-check up to max_n.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
    /// Compare against an OEIS A000975 b-file.
    Oeis {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        max_n: u64,
    },
    /// Build a tree whose leaf-depth parities equal the given 0/1 string.
    Construct {
        #[arg(long)]
        seq: String,
    },
    /// List every tree with n + 1 leaves.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "expr")]
        render: Render,
        #[arg(long, default_value = "*")]
        symbol: String,
    },
    /// Count (or list) admissible sequences of length n + 1.
    Admissible {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Coefficients of 1/((1+x)(1-x)(1-2x)).
    Gf {
        #[arg(long)]
        terms: usize,
    },
    /// Count classes for a * b = ζ^u a + ζ^v b, ζ a primitive k-th root of unity.
    Genop {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        #[arg(long)]
        max_n: usize,
    },
    /// Average leaf depth over all trees with n + 1 leaves.
    Stats {
        #[arg(long)]
        n: usize,
    },
}

fn parse_format(s: &str) -> Result<TableFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Flag beats environment beats default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<EnumCap, String> {
    let raw = match (flag, env) {
        (Some(c), _) => c,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| format!("invalid {} value {v:?}", EnumCap::ENV_VAR))?,
        (None, None) => return Ok(EnumCap::default()),
    };
    EnumCap::new(raw).map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotAdmissible(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let env = std::env::var(EnumCap::ENV_VAR).ok();
    let cap = match resolve_cap(cli.cap, env.as_deref()) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli.command, cap, out) {
        Ok(code) => code,
        Err(CommandError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(CommandError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CommandError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Lib(e)
    }
}

impl From<std::io::Error> for CommandError {
    fn from(e: std::io::Error) -> Self {
        CommandError::Io(e)
    }
}

fn execute(command: &Command, cap: EnumCap, out: &mut dyn Write) -> Result<i32, CommandError> {
    match command {
        Command::Count { n, method } => {
            let value = match method {
                CountMethod::Formula => count_formula::<Count>(*n),
                CountMethod::Brute => count_distinct_bruteforce(*n, cap)?,
            };
            writeln!(out, "{value}")?;
        }
        Command::Table {
            max_n,
            format,
            method,
        } => {
            let table = match method {
                CountMethod::Brute => CountTable::from_bruteforce(*max_n, cap)?,
                CountMethod::Formula => {
                    if *max_n > MAX_FORMULA_TABLE_N {
                        return Err(Error::EnumerationTooLarge {
                            n: *max_n,
                            cap: MAX_FORMULA_TABLE_N,
                        }
                        .into());
                    }
                    CountTable::from_formula(*max_n)
                }
            };
            out.write_all(table.render(*format).as_bytes())?;
        }
        Command::Verify { max_n } => {
            let report = run_checks(*max_n, cap, &Formulas::default())?;
            out.write_all(report.render().as_bytes())?;
            if !report.all_passed() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Oeis { bfile, max_n } => {
            let text = std::fs::read_to_string(bfile)?;
            let parsed = BFile::parse(&text)?;
            let cmp = compare_a000975(&parsed, *max_n);
            out.write_all(cmp.report().as_bytes())?;
            if !cmp.all_match() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Construct { seq } => {
            let seq: ParitySeq = seq.parse()?;
            let check = Admissibility::of(&seq)?;
            if !check.is_admissible() {
                writeln!(out, "not admissible: {seq}")?;
                for reason in check.failures() {
                    writeln!(out, "  {reason}")?;
                }
                return Ok(EXIT_FAILURE);
            }
            let t = admissible_to_tree(&seq)?;
            writeln!(out, "{}", t.encode_bits())?;
            writeln!(out, "{}", t.render_expression("#"))?;
            writeln!(out, "{}", t.depth_sequence())?;
        }
        Command::Trees { n, render, symbol } => {
            for t in enumerate_trees(*n, cap)? {
                match render {
                    Render::Expr => writeln!(out, "{}", t.render_expression(symbol))?,
                    Render::Bits => writeln!(out, "{}", t.encode_bits())?,
                    Render::Depths => writeln!(out, "{}", t.depth_sequence())?,
                }
            }
        }
        Command::Admissible { n, list } => {
            let seqs = enumerate_admissible(*n)?;
            if *list {
                for s in seqs {
                    writeln!(out, "{s}")?;
                }
            } else {
                writeln!(out, "{}", seqs.count())?;
            }
        }
        Command::Gf { terms } => {
            let coeffs: Vec<String> = gf_coeffs::<Count>(*terms)
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(out, "{}", coeffs.join(" "))?;
        }
        Command::Genop { k, u, v, max_n } => {
            let op = LinearOp::new(*k, *u, *v)?;
            cap.check(*max_n)?;
            for n in 0..=*max_n {
                let classes = count_distinct_generic(op, n, cap)?;
                writeln!(
                    out,
                    "n={n} classes={classes} catalan={}",
                    catalan::<Count>(n)
                )?;
            }
            match nonassociativity_depth(op, *max_n, cap)? {
                Some(d) => writeln!(out, "depth={d}")?,
                None => writeln!(out, "depth=none (no drop for n <= {max_n})")?,
            }
        }
        Command::Stats { n } => {
            writeln!(out, "{}", average_leaf_depth(*n, cap)?)?;
        }
    }
    Ok(EXIT_OK)
}
