//! Nonassociativity of linear operations `a * b = α a + β b` whose
//! coefficients are `k`-th roots of unity, `α = ζ^u`, `β = ζ^v`.
//!
//! A parenthesization evaluates to `Σ ζ^{e_i} x_i` where `e_i` adds `u` for
//! every left step and `v` for every right step on the path to leaf `i`.
//! Distinct powers of a primitive root are distinct, so two
//! parenthesizations agree as functions iff their exponent vectors agree.

use std::collections::HashSet;
use std::fmt;

use crate::tree::{catalan, enumerate_trees, EnumCap, Tree};
use crate::{Count, Error, Result};

/// `a * b = ζ^u a + ζ^v b` with `ζ` a primitive `k`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearOp {
    k: u32,
    u: u32,
    v: u32,
}

impl LinearOp {
    /// `a ⊖ b = -a - b`.
    pub const DOUBLE_MINUS: LinearOp = LinearOp { k: 2, u: 1, v: 1 };
    /// `a + b`.
    pub const SUM: LinearOp = LinearOp { k: 1, u: 0, v: 0 };

    pub fn new(k: u32, u: u32, v: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidOp("k must be at least 1".into()));
        }
        if u >= k || v >= k {
            return Err(Error::InvalidOp(format!(
                "exponents must lie in [0, {k}), got u = {u}, v = {v}"
            )));
        }
        Ok(LinearOp { k, u, v })
    }

    /// `a * b = ω a + b` with `ω` a primitive `k`-th root of unity.
    pub fn omega_left(k: u32) -> Result<Self> {
        Self::new(k, 1 % k, 0)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn v(&self) -> u32 {
        self.v
    }
}

impl fmt::Display for LinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ^{} a + ζ^{} b (ζ^{} = 1)", self.u, self.v, self.k)
    }
}

/// Exponent of `ζ` on each operand, in preorder leaf order, reduced mod `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffVector(Vec<u32>);

impl CoeffVector {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

pub fn coeff_vector(op: LinearOp, t: &Tree) -> CoeffVector {
    let k = u64::from(op.k);
    let (u, v) = (u64::from(op.u), u64::from(op.v));
    let mut out = Vec::with_capacity(t.leaf_count());
    t.walk_leaves(|l, r| {
        let e = (u * l as u64 + v * r as u64) % k;
        out.push(e as u32);
    });
    CoeffVector(out)
}

/// Number of `*`-equivalence classes of parenthesizations of
/// `x0 * ... * xn`.
pub fn count_distinct_generic(op: LinearOp, n: usize, cap: EnumCap) -> Result<Count> {
    let classes: HashSet<CoeffVector> = enumerate_trees(n, cap)?
        .map(|t| coeff_vector(op, &t))
        .collect();
    Ok(Count::from(classes.len()))
}

/// `inf { n + 1 : C_{*,n} < C_n }` over `n = 1..=max_n`, or `None` when no
/// strict drop occurs in range.
pub fn nonassociativity_depth(op: LinearOp, max_n: usize, cap: EnumCap) -> Result<Option<usize>> {
    cap.check(max_n)?;
    for n in 1..=max_n {
        if count_distinct_generic(op, n, cap)? < catalan::<Count>(n) {
            return Ok(Some(n + 1));
        }
    }
    Ok(None)
}
