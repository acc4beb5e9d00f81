//! Measuring the nonassociativity of the double-minus operation `a ⊖ b = -a - b`.
//!
//! Parenthesizations of `x0 ⊖ x1 ⊖ ... ⊖ xn` correspond to full binary trees
//! with `n + 1` leaves, and the result of a parenthesization is
//! `Σ (-1)^{d_i} x_i` where `d_i` is the depth of leaf `i`. Counting distinct
//! results therefore reduces to counting distinct leaf-depth parity patterns.
//! This crate enumerates those patterns by brute force, evaluates the closed
//! forms, and cross-checks them with exact integer arithmetic.
//!
//! The arithmetic modules are generic over the integer scalar (anything
//! implementing [`num_integer::Integer`]); the aliases below fix the
//! arbitrary-precision types used by the rest of the crate and the CLI.

pub mod admissible;
pub mod bfile;
pub mod cli;
pub mod double_minus;
pub mod error;
pub mod generic_op;
pub mod num;
pub mod series;
pub mod table;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};

/// Unsigned arbitrary-precision count.
pub type Count = num_bigint::BigUint;
/// Signed arbitrary-precision integer.
pub type SignedCount = num_bigint::BigInt;
/// Exact element of `Z[ω]` with arbitrary-precision coordinates.
pub type Eisenstein = series::EisensteinInt<SignedCount>;
/// Exact nonnegative rational.
pub type Rational = num_rational::Ratio<Count>;

pub use admissible::{
    admissible_to_tree, contract, enumerate_admissible, is_admissible, Admissibility,
};
pub use double_minus::{
    a000975, count_distinct_bruteforce, count_formula, refined_count_formula,
    refined_counts_bruteforce, sign_parity, A000975Method, ParitySeq,
};
pub use generic_op::{coeff_vector, count_distinct_generic, nonassociativity_depth, LinearOp};
pub use table::CountTable;
pub use tree::{catalan, enumerate_trees, DepthSeq, EnumCap, Tree};
