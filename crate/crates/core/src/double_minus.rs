//! Counting distinct results of parenthesized `x0 ⊖ x1 ⊖ ... ⊖ xn`.
//!
//! Expanding `a ⊖ b = -a - b` gives every `x_i` one minus sign per edge on
//! its root path, so a parenthesization is determined up to value by the
//! depth parities of its leaves. `r` always counts plus signs, i.e. leaves
//! of even depth (zeros of the [`ParitySeq`]).

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::num::{from_usize, pow2, Scalar};
use crate::tree::{enumerate_trees, EnumCap, Tree};
use crate::{Count, Error, Result};

/// Depth parities of the leaves of a tree, or any candidate sign pattern.
/// Bit `i` is `0` when `x_i` carries a plus sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParitySeq(Vec<u8>);

impl ParitySeq {
    /// Panics if any entry is not 0 or 1.
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "parity bits must be 0 or 1");
        ParitySeq(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of plus signs.
    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    /// Bit `i` of the result is bit `i` of the sequence. Requires length ≤ 128.
    pub fn packed(&self) -> u128 {
        assert!(self.0.len() <= 128);
        self.0
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &b)| acc | (u128::from(b) << i))
    }

    pub fn from_packed(key: u128, len: usize) -> Self {
        ParitySeq((0..len).map(|i| ((key >> i) & 1) as u8).collect())
    }
}

impl FromStr for ParitySeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::NotBinary(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(ParitySeq)
    }
}

impl fmt::Display for ParitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

/// Bit `i` is the depth of leaf `i` modulo 2.
pub fn sign_parity(t: &Tree) -> ParitySeq {
    let mut bits = Vec::with_capacity(t.leaf_count());
    t.walk_leaves(|l, r| bits.push(((l + r) & 1) as u8));
    ParitySeq(bits)
}

fn parity_key(t: &Tree) -> u128 {
    let mut key = 0u128;
    let mut i = 0;
    t.walk_leaves(|l, r| {
        key |= (((l + r) & 1) as u128) << i;
        i += 1;
    });
    key
}

fn distinct_parity_keys(n: usize, cap: EnumCap) -> Result<HashSet<u128>> {
    let trees = enumerate_trees(n, cap)?;
    Ok(trees.map(|t| parity_key(&t)).collect())
}

/// Number of distinct results over `T_n`, by deduplicating parity patterns.
pub fn count_distinct_bruteforce(n: usize, cap: EnumCap) -> Result<Count> {
    Ok(Count::from(distinct_parity_keys(n, cap)?.len()))
}

/// Row `n` of the refined table: entry `r` counts distinct results with
/// exactly `r` plus signs. The row has `n + 2` entries.
pub fn refined_counts_bruteforce(n: usize, cap: EnumCap) -> Result<Vec<Count>> {
    let mut row = vec![0usize; n + 2];
    for key in distinct_parity_keys(n, cap)? {
        let zeros = n + 1 - key.count_ones() as usize;
        row[zeros] += 1;
    }
    Ok(row.into_iter().map(Count::from).collect())
}

/// Closed form for the number of distinct results with exactly `r` plus
/// signs, valid for `n ≥ 1`.
pub fn refined_count_formula<T: Scalar>(n: usize, r: usize) -> Result<T> {
    if n < 1 {
        return Err(Error::NTooSmall { n, min: 1 });
    }
    if r > n + 1 {
        return Err(Error::ROutOfRange { n, r });
    }
    if (n + r) % 3 != 1 {
        return Ok(T::zero());
    }
    let full = crate::num::binomial::<T>(n + 1, r);
    // The single alternating pattern 0101...10 is never a tree's parity.
    if n + 2 == 2 * r {
        Ok(full - T::one())
    } else {
        Ok(full)
    }
}

/// Number of distinct results for `n + 1` operands: `⌊2^{n+1}/3⌋`, with the
/// single operand case `n = 0` giving 1.
pub fn count_formula<T: Scalar>(n: usize) -> T {
    if n == 0 {
        return T::one();
    }
    pow2::<T>(n + 1) / T::from(3)
}

/// The characterizations of OEIS A000975.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A000975Method {
    /// `⌊2^{n+1}/3⌋`.
    Floor,
    /// `(2^{n+2} - 3 - (-1)^n) / 6`.
    Sixth,
    /// `A_{m+1} = 2A_m` for odd `m`, `2A_m + 1` for even `m`.
    ParityRecurrence,
    /// `A_m = 2^m - 1 - A_{m-1}`.
    ComplementRecurrence,
    /// `A_m = A_{m-2} + 2^{m-1}` from `A_1 = 1, A_2 = 2`.
    Step2Recurrence,
    /// Binary digits `1010...` of length `n`.
    AlternatingBinary,
}

impl A000975Method {
    pub const ALL: [A000975Method; 6] = [
        A000975Method::Floor,
        A000975Method::Sixth,
        A000975Method::ParityRecurrence,
        A000975Method::ComplementRecurrence,
        A000975Method::Step2Recurrence,
        A000975Method::AlternatingBinary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            A000975Method::Floor => "floor",
            A000975Method::Sixth => "sixth",
            A000975Method::ParityRecurrence => "parity_recurrence",
            A000975Method::ComplementRecurrence => "complement_recurrence",
            A000975Method::Step2Recurrence => "step2_recurrence",
            A000975Method::AlternatingBinary => "alternating_binary",
        }
    }
}

impl FromStr for A000975Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

impl fmt::Display for A000975Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `A_n` of OEIS A000975 for `n ≥ 1`.
pub fn a000975<T: Scalar>(n: usize, method: A000975Method) -> Result<T> {
    if n == 0 {
        return Err(Error::A000975Zero);
    }
    let two = || T::from(2);
    let value = match method {
        A000975Method::Floor => pow2::<T>(n + 1) / T::from(3),
        A000975Method::Sixth => {
            // 3 + (-1)^n, kept nonnegative for unsigned scalars.
            let offset = T::from(if n.is_multiple_of(2) { 4 } else { 2 });
            let numerator = pow2::<T>(n + 2) - offset;
            let (q, rem) = numerator.div_rem(&T::from(6));
            assert!(rem.is_zero(), "2^(n+2) - 3 - (-1)^n not divisible by 6");
            q
        }
        A000975Method::ParityRecurrence => {
            let mut a = T::one();
            for m in 1..n {
                a = two() * a;
                if m.is_multiple_of(2) {
                    a = a + T::one();
                }
            }
            a
        }
        A000975Method::ComplementRecurrence => {
            let mut a = T::one();
            for m in 2..=n {
                a = pow2::<T>(m) - T::one() - a;
            }
            a
        }
        A000975Method::Step2Recurrence => {
            let (mut prev, mut cur) = (T::one(), two());
            if n == 1 {
                return Ok(prev);
            }
            for m in 3..=n {
                let next = prev + pow2::<T>(m - 1);
                prev = cur;
                cur = next;
            }
            cur
        }
        A000975Method::AlternatingBinary => (0..n).fold(T::zero(), |acc, i| {
            two() * acc + from_usize::<T>(usize::from(i.is_multiple_of(2)))
        }),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{decode_bits, leaf};

    fn seq(s: &str) -> ParitySeq {
        s.parse().unwrap()
    }

    #[test]
    fn sign_parity_examples() {
        assert_eq!(sign_parity(&decode_bits("11000").unwrap()), seq("001"));
        assert_eq!(sign_parity(&leaf()), seq("0"));
        // s ∧ t with depths (3,4,4,2,3,3,2)
        let st = decode_bits("1110100011000").unwrap();
        assert_eq!(sign_parity(&st), seq("1000110"));
    }

    #[test]
    fn parity_packing() {
        let p = seq("1000110");
        assert_eq!(ParitySeq::from_packed(p.packed(), 7), p);
        assert_eq!(p.zeros(), 4);
        assert_eq!("012".parse::<ParitySeq>(), Err(Error::NotBinary('2')));
    }

    #[test]
    fn brute_force_small() {
        let cap = EnumCap::default();
        assert_eq!(count_distinct_bruteforce(0, cap).unwrap(), Count::from(1u8));
        assert_eq!(count_distinct_bruteforce(2, cap).unwrap(), Count::from(2u8));
        assert_eq!(
            count_distinct_bruteforce(7, cap).unwrap(),
            Count::from(85u8)
        );
        assert!(count_distinct_bruteforce(19, cap).is_err());
    }

    #[test]
    fn refined_rows() {
        let cap = EnumCap::default();
        let as_u64 = |row: Vec<Count>| -> Vec<u64> {
            row.iter().map(|c| u64::try_from(c).unwrap()).collect()
        };
        assert_eq!(
            as_u64(refined_counts_bruteforce(0, cap).unwrap()),
            vec![0, 1]
        );
        assert_eq!(
            as_u64(refined_counts_bruteforce(4, cap).unwrap()),
            vec![1, 0, 0, 9, 0, 0]
        );
        assert_eq!(
            as_u64(refined_counts_bruteforce(6, cap).unwrap()),
            vec![0, 7, 0, 0, 34, 0, 0, 1]
        );
    }

    #[test]
    fn refined_formula_cells() {
        assert_eq!(refined_count_formula::<u64>(6, 4).unwrap(), 34);
        assert_eq!(refined_count_formula::<u64>(5, 3).unwrap(), 0);
        assert_eq!(refined_count_formula::<u64>(3, 4).unwrap(), 1);
        assert_eq!(
            refined_count_formula::<u64>(3, 5),
            Err(Error::ROutOfRange { n: 3, r: 5 })
        );
        assert!(refined_count_formula::<u64>(0, 1).is_err());
    }

    #[test]
    fn count_formula_values() {
        assert_eq!(count_formula::<u64>(0), 1);
        assert_eq!(count_formula::<u64>(5), 21);
        assert_eq!(count_formula::<u64>(6), 42);
        let big: Count = count_formula(100);
        assert_eq!(big, ((Count::from(1u8) << 101usize) - 2u8) / 3u8);
        let mut prev = Count::from(1u8);
        for m in 2..=100 {
            prev = (Count::from(1u8) << m) - 1u8 - prev;
        }
        assert_eq!(big, prev);
    }

    #[test]
    fn a000975_methods() {
        for m in A000975Method::ALL {
            assert_eq!(a000975::<u64>(3, m).unwrap(), 5, "{m}");
            assert_eq!(a000975::<u64>(1, m).unwrap(), 1, "{m}");
            assert_eq!(a000975::<u64>(2, m).unwrap(), 2, "{m}");
            assert_eq!(m.name().parse::<A000975Method>().unwrap(), m);
        }
        assert_eq!(
            a000975::<u64>(4, A000975Method::AlternatingBinary).unwrap(),
            0b1010
        );
        assert_eq!(
            a000975::<u64>(0, A000975Method::Floor),
            Err(Error::A000975Zero)
        );
        let reference: Count = a000975(257, A000975Method::Floor).unwrap();
        for m in A000975Method::ALL {
            assert_eq!(a000975::<Count>(257, m).unwrap(), reference, "{m}");
        }
    }
}
