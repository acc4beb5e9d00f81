//! Exact series identities: skipping sums of binomial coefficients via cube
//! roots of unity, generating-function coefficients, and the average leaf
//! depth over `T_n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::num::{binomial, from_usize, pow2, Scalar};
use crate::table::CountTable;
use crate::tree::{catalan, enumerate_trees, EnumCap};
use crate::{Count, Rational, Result};

/// `a + bω` in `Z[ω]`, with `ω² = -1 - ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar + Signed> EisensteinInt<T> {
    pub fn new(a: T, b: T) -> Self {
        EisensteinInt { a, b }
    }

    pub fn from_int(a: T) -> Self {
        EisensteinInt { a, b: T::zero() }
    }

    pub fn omega() -> Self {
        EisensteinInt::new(T::zero(), T::one())
    }

    /// `ω^e` for any integer exponent.
    pub fn omega_pow(e: i64) -> Self {
        match e.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::omega(),
            _ => EisensteinInt::new(-T::one(), -T::one()),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// The rational integer this element equals, if `b = 0`.
    pub fn as_rational_integer(&self) -> Option<&T> {
        self.b.is_zero().then_some(&self.a)
    }
}

impl<T: Scalar + Signed> Add for EisensteinInt<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        EisensteinInt::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Scalar + Signed> Sub for EisensteinInt<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        EisensteinInt::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Scalar + Signed> Neg for EisensteinInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl<T: Scalar + Signed> Mul for EisensteinInt<T> {
    type Output = Self;
    // (a + bω)(c + dω) = (ac - bd) + (ad + bc - bd)ω
    fn mul(self, rhs: Self) -> Self {
        let bd = self.b.clone() * rhs.b.clone();
        EisensteinInt::new(
            self.a.clone() * rhs.a.clone() - bd.clone(),
            self.a * rhs.b + self.b * rhs.a - bd,
        )
    }
}

impl<T: Scalar + Signed> Zero for EisensteinInt<T> {
    fn zero() -> Self {
        EisensteinInt::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar + Signed> One for EisensteinInt<T> {
    fn one() -> Self {
        EisensteinInt::new(T::one(), T::zero())
    }
}

impl<T: Scalar + Signed> fmt::Display for EisensteinInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}ω", self.a, self.b.abs())
        } else {
            write!(f, "{} + {}ω", self.a, self.b)
        }
    }
}

/// `Σ binom(n, i)` over `0 ≤ i ≤ n` with `i ≡ k (mod 3)`.
pub fn skipping_sum_direct<T: Scalar>(n: usize, k: usize) -> T {
    (0..=n)
        .filter(|i| i % 3 == k % 3)
        .fold(T::zero(), |acc, i| acc + binomial::<T>(n, i))
}

/// The same sum as `(2^n + ω^{-k}(1+ω)^n + ω^k(1+ω²)^n) / 3`, evaluated in
/// `Z[ω]`.
///
/// Panics if the numerator is not a rational integer divisible by 3; that
/// can only be an arithmetic bug.
pub fn skipping_sum_closed<T: Scalar + Signed>(n: usize, k: usize) -> T {
    type E<T> = EisensteinInt<T>;
    let k = (k % 3) as i64;
    // 1 + ω = -ω² and 1 + ω² = -ω.
    let one_plus_omega = -E::<T>::omega_pow(2);
    let one_plus_omega_sq = -E::<T>::omega();
    let numerator = E::from_int(pow2::<T>(n))
        + E::omega_pow(-k) * one_plus_omega.pow(n)
        + E::omega_pow(k) * one_plus_omega_sq.pow(n);
    let value = numerator
        .as_rational_integer()
        .unwrap_or_else(|| panic!("skipping-sum numerator {numerator} is not rational"));
    let (q, r) = value.div_rem(&T::from(3));
    assert!(
        r.is_zero(),
        "skipping-sum numerator {value} not divisible by 3"
    );
    q
}

/// `Σ binom(n+1, r)` over `0 ≤ r ≤ n+1` with `r ≡ 1 - n (mod 3)`; equals the
/// distinct-result count for odd `n` and one more than it for even `n`.
pub fn cprime<T: Scalar>(n: usize) -> T {
    // 1 - n ≡ 1 + 2n (mod 3)
    let residue = (1 + 2 * n) % 3;
    skipping_sum_direct::<T>(n + 1, residue)
}

/// `(2^{n+1} + (-1)^n) / 3`, exact.
pub fn cprime_closed<T: Scalar>(n: usize) -> T {
    let p = pow2::<T>(n + 1);
    let numerator = if n.is_multiple_of(2) {
        p + T::one()
    } else {
        p - T::one()
    };
    numerator / T::from(3)
}

/// Leading coefficients of `1/((1+x)(1-x)(1-2x)) = 1/(1 - 2x - x² + 2x³)`,
/// from `c_n = 2c_{n-1} + c_{n-2} - 2c_{n-3}`.
///
/// `c_n` is the distinct-result count for `n + 2` operands, i.e. the series
/// is `Σ C_{⊖,n+1} x^n`: the same sequence shifted down by one index.
pub fn gf_coeffs<T: Scalar>(terms: usize) -> Vec<T> {
    let mut c: Vec<T> = Vec::with_capacity(terms);
    let at = |c: &[T], i: usize, back: usize| -> T {
        if i >= back {
            c[i - back].clone()
        } else {
            T::zero()
        }
    };
    for i in 0..terms {
        let value = if i == 0 {
            T::one()
        } else {
            // Grouped so unsigned scalars never go negative.
            T::from(2) * at(&c, i, 1) + at(&c, i, 2) - T::from(2) * at(&c, i, 3)
        };
        c.push(value);
    }
    c
}

/// Power-series long division `numerator / denominator`, for denominators
/// with constant term 1.
pub fn series_divide(numerator: &[i64], denominator: &[i64], terms: usize) -> Vec<i64> {
    assert_eq!(
        denominator.first(),
        Some(&1),
        "denominator must start with 1"
    );
    let mut rem: Vec<i64> = numerator.to_vec();
    rem.resize(terms.max(numerator.len()), 0);
    let mut out = Vec::with_capacity(terms);
    for i in 0..terms {
        let q = rem[i];
        out.push(q);
        for (j, &d) in denominator.iter().enumerate().skip(1) {
            if i + j < rem.len() {
                rem[i + j] -= q * d;
            }
        }
    }
    out
}

/// Coefficients of `Σ_n Σ_r C_{⊖,n,r} x^n y^r` up to `x^{max_n}`.
pub fn gf_bivariate_table(max_n: usize) -> CountTable {
    CountTable::from_formula(max_n)
}

/// Total leaf depth over `T_n`, summed per tree and per leaf index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthTotals {
    pub per_tree: Count,
    pub per_leaf_index: Vec<Count>,
    pub trees: Count,
}

pub fn depth_totals(n: usize, cap: EnumCap) -> Result<DepthTotals> {
    let mut per_tree = Count::zero();
    let mut per_index = vec![0u64; n + 1];
    let mut trees = 0u64;
    for t in enumerate_trees(n, cap)? {
        let depths = t.depth_sequence();
        let mut tree_sum = 0u64;
        for (i, &d) in depths.as_slice().iter().enumerate() {
            per_index[i] += d as u64;
            tree_sum += d as u64;
        }
        per_tree += tree_sum;
        trees += 1;
    }
    Ok(DepthTotals {
        per_tree,
        per_leaf_index: per_index.into_iter().map(Count::from).collect(),
        trees: Count::from(trees),
    })
}

/// Mean depth of a leaf over all trees in `T_n`, as a reduced fraction.
pub fn average_leaf_depth(n: usize, cap: EnumCap) -> Result<Rational> {
    let totals = depth_totals(n, cap)?;
    let leaves = from_usize::<BigUint>(n + 1) * catalan::<BigUint>(n);
    Ok(Rational::new(totals.per_tree, leaves))
}
