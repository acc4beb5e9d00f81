//! Admissible binary sequences and the witness construction that turns one
//! into a tree with that leaf-depth parity pattern.
//!
//! A sequence `(d_0, ..., d_n)` is admissible when it is non-alternating
//! (some adjacent pair is equal, vacuous for `n = 0`) and
//! `n + #zeros ≡ 1 (mod 3)`. These are exactly the parity patterns realized
//! by trees in `T_n`.

use crate::double_minus::ParitySeq;
use crate::tree::{leaf, Tree};
use crate::{Error, Result};

/// Largest `n` for which [`enumerate_admissible`] scans `{0,1}^{n+1}`.
pub const ADMISSIBLE_SCAN_CAP: usize = 30;

/// Outcome of checking both admissibility conditions separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissibility {
    pub n: usize,
    /// Number of zeros (plus signs).
    pub r: usize,
    pub non_alternating: bool,
    pub residue_ok: bool,
}

impl Admissibility {
    pub fn of(seq: &ParitySeq) -> Result<Self> {
        let bits = seq.bits();
        if bits.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = bits.len() - 1;
        let r = seq.zeros();
        Ok(Admissibility {
            n,
            r,
            non_alternating: n == 0 || bits.windows(2).any(|w| w[0] == w[1]),
            residue_ok: (n + r) % 3 == 1,
        })
    }

    pub fn is_admissible(&self) -> bool {
        self.non_alternating && self.residue_ok
    }

    /// Human-readable list of failed conditions; empty when admissible.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.non_alternating {
            out.push("alternating: no two adjacent entries are equal".to_string());
        }
        if !self.residue_ok {
            out.push(format!(
                "mod-3: n + r = {} + {} = {} ≡ {} (mod 3), need 1",
                self.n,
                self.r,
                self.n + self.r,
                (self.n + self.r) % 3
            ));
        }
        out
    }
}

pub fn is_admissible(seq: &ParitySeq) -> Result<bool> {
    Admissibility::of(seq).map(|a| a.is_admissible())
}

/// All admissible sequences of length `n + 1` in lexicographic order
/// (leaf 0 most significant), by scanning every bit pattern.
pub fn enumerate_admissible(n: usize) -> Result<impl Iterator<Item = ParitySeq>> {
    if n > ADMISSIBLE_SCAN_CAP {
        return Err(Error::EnumerationTooLarge {
            n,
            cap: ADMISSIBLE_SCAN_CAP,
        });
    }
    let len = n + 1;
    Ok((0u64..1 << len).filter_map(move |v| {
        let bits = (0..len).map(|i| ((v >> (len - 1 - i)) & 1) as u8).collect();
        let seq = ParitySeq::new(bits);
        is_admissible(&seq).unwrap_or(false).then_some(seq)
    }))
}

/// One contraction step: merges a pair of equal adjacent symbols into a
/// single opposite symbol, preserving admissibility. Returns the shorter
/// sequence and the position of the inserted symbol.
///
/// Rule: take the leftmost maximal run of length ≥ 2. If it is preceded by
/// the opposite symbol, replace its first two entries; else if it is
/// followed by the opposite symbol, replace its last two; else the sequence
/// is constant and its first two entries are replaced.
pub fn contract(seq: &ParitySeq) -> Result<(ParitySeq, usize)> {
    let check = Admissibility::of(seq)?;
    if !check.is_admissible() {
        return Err(Error::NotAdmissible(format!(
            "{seq}: {}",
            check.failures().join("; ")
        )));
    }
    let bits = seq.bits();
    if bits.len() < 2 {
        return Err(Error::NotAdmissible(format!(
            "{seq}: length-1 sequences cannot be contracted"
        )));
    }
    let start = bits
        .windows(2)
        .position(|w| w[0] == w[1])
        .expect("admissible sequences of length ≥ 2 have an equal adjacent pair");
    let symbol = bits[start];
    let end = start + bits[start..].iter().take_while(|&&b| b == symbol).count();
    let index = if start > 0 {
        start
    } else if end < bits.len() {
        end - 2
    } else {
        0
    };
    let mut shorter = Vec::with_capacity(bits.len() - 1);
    shorter.extend_from_slice(&bits[..index]);
    shorter.push(1 - symbol);
    shorter.extend_from_slice(&bits[index + 2..]);
    Ok((ParitySeq::new(shorter), index))
}

/// Builds a tree whose leaf-depth parities equal `seq`.
///
/// Contracts down to `(0)`, then expands leaves in reverse order; splitting
/// a leaf flips the parity of both new leaves, undoing the contraction.
pub fn admissible_to_tree(seq: &ParitySeq) -> Result<Tree> {
    let check = Admissibility::of(seq)?;
    if !check.is_admissible() {
        return Err(Error::NotAdmissible(format!(
            "{seq}: {}",
            check.failures().join("; ")
        )));
    }
    let mut indices = Vec::with_capacity(seq.len());
    let mut current = seq.clone();
    while current.len() > 1 {
        let (shorter, index) = contract(&current)?;
        indices.push(index);
        current = shorter;
    }
    debug_assert_eq!(current.bits(), &[0]);
    Ok(indices
        .into_iter()
        .rev()
        .fold(leaf(), |tree, index| tree.expand_leaf(index)))
}
