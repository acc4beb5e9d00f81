//! Full binary trees: construction, enumeration, preorder bit codes,
//! parenthesized rendering and leaf depths.
//!
//! Trees are immutable and structurally shared (`Arc`), so cloning is O(1)
//! and enumeration allocates one node per yielded tree on average.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::num::Scalar;
use crate::{Error, Result};

/// A full binary tree: every node has zero or two ordered children.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree(Arc<Node>);

#[derive(PartialEq, Eq, Hash)]
enum Node {
    Leaf,
    Internal {
        left: Tree,
        right: Tree,
        leaves: usize,
    },
}

/// Borrowed view of the root of a [`Tree`].
#[derive(Debug, Clone, Copy)]
pub enum Shape<'a> {
    Leaf,
    Internal(&'a Tree, &'a Tree),
}

/// Returns the single-node tree, the unique member of `T_0`.
pub fn leaf() -> Tree {
    static LEAF: OnceLock<Tree> = OnceLock::new();
    LEAF.get_or_init(|| Tree(Arc::new(Node::Leaf))).clone()
}

/// The tree whose root has left subtree `s` and right subtree `t`.
pub fn wedge(s: Tree, t: Tree) -> Tree {
    let leaves = s.leaf_count() + t.leaf_count();
    Tree(Arc::new(Node::Internal {
        left: s,
        right: t,
        leaves,
    }))
}

impl Tree {
    pub fn shape(&self) -> Shape<'_> {
        match &*self.0 {
            Node::Leaf => Shape::Leaf,
            Node::Internal { left, right, .. } => Shape::Internal(left, right),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(*self.0, Node::Leaf)
    }

    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self.shape() {
            Shape::Leaf => None,
            Shape::Internal(l, r) => Some((l, r)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match &*self.0 {
            Node::Leaf => 1,
            Node::Internal { leaves, .. } => *leaves,
        }
    }

    pub fn internal_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// `n` such that the tree lies in `T_n`.
    pub fn size(&self) -> usize {
        self.internal_count()
    }

    /// Visits every leaf in preorder with its root path, as
    /// `(left steps, right steps)`.
    pub fn walk_leaves(&self, mut visit: impl FnMut(usize, usize)) {
        let mut stack = vec![(self, 0usize, 0usize)];
        while let Some((t, l, r)) = stack.pop() {
            match t.shape() {
                Shape::Leaf => visit(l, r),
                Shape::Internal(a, b) => {
                    stack.push((b, l, r + 1));
                    stack.push((a, l + 1, r));
                }
            }
        }
    }

    pub fn depth_sequence(&self) -> DepthSeq {
        let mut depths = Vec::with_capacity(self.leaf_count());
        self.walk_leaves(|l, r| depths.push(l + r));
        DepthSeq(depths)
    }

    /// Preorder code: internal node emits `1`, leaf emits `0`.
    pub fn encode_bits(&self) -> String {
        let mut out = String::with_capacity(2 * self.leaf_count() - 1);
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t.shape() {
                Shape::Leaf => out.push('0'),
                Shape::Internal(a, b) => {
                    out.push('1');
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }

    pub fn decode_bits(code: &str) -> Result<Tree> {
        decode_bits(code)
    }

    /// Fully parenthesized infix expression over `x0..xn`, outermost
    /// parentheses omitted.
    pub fn render_expression(&self, op: &str) -> String {
        fn go(t: &Tree, op: &str, next: &mut usize, top: bool, out: &mut String) {
            match t.shape() {
                Shape::Leaf => {
                    out.push('x');
                    out.push_str(&next.to_string());
                    *next += 1;
                }
                Shape::Internal(a, b) => {
                    if !top {
                        out.push('(');
                    }
                    go(a, op, next, false, out);
                    out.push_str(op);
                    go(b, op, next, false, out);
                    if !top {
                        out.push(')');
                    }
                }
            }
        }
        let mut out = String::new();
        go(self, op, &mut 0, true, &mut out);
        out
    }

    /// Replaces preorder leaf `index` by an internal node with two leaf
    /// children. Rebuilds only the root-to-leaf path.
    ///
    /// Panics if `index >= leaf_count()`.
    pub fn expand_leaf(&self, index: usize) -> Tree {
        assert!(index < self.leaf_count(), "leaf index out of range");
        match self.shape() {
            Shape::Leaf => wedge(leaf(), leaf()),
            Shape::Internal(a, b) => {
                let split = a.leaf_count();
                if index < split {
                    wedge(a.expand_leaf(index), b.clone())
                } else {
                    wedge(a.clone(), b.expand_leaf(index - split))
                }
            }
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.encode_bits())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_expression("*"))
    }
}

/// Parses a preorder code produced by [`Tree::encode_bits`].
pub fn decode_bits(code: &str) -> Result<Tree> {
    if code.is_empty() {
        return Err(Error::MalformedTreeCode("empty code".into()));
    }
    // Frames hold the finished left child, if any, of a pending internal node.
    let mut frames: Vec<Option<Tree>> = Vec::new();
    let mut done: Option<Tree> = None;
    for (pos, ch) in code.chars().enumerate() {
        if done.is_some() {
            return Err(Error::MalformedTreeCode(format!(
                "trailing bits after position {pos}"
            )));
        }
        let mut finished = match ch {
            '1' => {
                frames.push(None);
                continue;
            }
            '0' => leaf(),
            other => {
                return Err(Error::MalformedTreeCode(format!(
                    "unexpected character {other:?} at position {pos}"
                )))
            }
        };
        loop {
            match frames.last_mut() {
                None => {
                    done = Some(finished);
                    break;
                }
                Some(slot @ None) => {
                    *slot = Some(finished);
                    break;
                }
                Some(Some(_)) => {
                    let left = frames.pop().flatten().expect("left child present");
                    finished = wedge(left, finished);
                }
            }
        }
    }
    done.ok_or_else(|| Error::MalformedTreeCode("code terminates early".into()))
}

/// Leaf depths of a tree in preorder.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DepthSeq(Vec<usize>);

impl DepthSeq {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Numerator of the Kraft sum over the common denominator
    /// `2^max_depth`: `Σ 2^{D - d_i}`.
    pub fn kraft_numerator(&self) -> BigUint {
        let top = self.max_depth();
        self.0.iter().map(|&d| BigUint::one() << (top - d)).sum()
    }

    /// `Σ 2^{-d_i} == 1`, exactly.
    pub fn kraft_is_one(&self) -> bool {
        self.kraft_numerator() == BigUint::one() << self.max_depth()
    }

    /// Some adjacent pair of leaves has equal depth.
    pub fn has_equal_adjacent(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    /// Whether the sequence satisfies every depth-sequence invariant.
    pub fn is_well_formed(&self) -> bool {
        match self.0.as_slice() {
            [] => false,
            [d] => *d == 0,
            ds => ds.iter().all(|&d| d >= 1) && self.has_equal_adjacent() && self.kraft_is_one(),
        }
    }
}

impl From<DepthSeq> for Vec<usize> {
    fn from(d: DepthSeq) -> Self {
        d.0
    }
}

impl fmt::Display for DepthSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Upper bound on `n` for anything that enumerates `T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap(usize);

impl EnumCap {
    pub const DEFAULT: usize = 18;
    /// Parity patterns are packed into `u128`.
    pub const HARD_MAX: usize = 127;
    pub const ENV_VAR: &'static str = "NONASSOC_ENUM_CAP";

    pub fn new(cap: usize) -> Result<Self> {
        if cap > Self::HARD_MAX {
            return Err(Error::InvalidCap(cap));
        }
        Ok(EnumCap(cap))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::EnumerationTooLarge { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap(Self::DEFAULT)
    }
}

/// Lazily yields every tree of `T_n` exactly once: left subtree size
/// ascending, each side in its own recursive order, left-major.
pub fn enumerate_trees(n: usize, cap: EnumCap) -> Result<Trees> {
    cap.check(n)?;
    Ok(Trees::new(n))
}

pub struct Trees {
    n: usize,
    state: State,
}

enum State {
    Leaf {
        done: bool,
    },
    Split {
        left_size: usize,
        left: Box<Trees>,
        current_left: Option<Tree>,
        right: Box<Trees>,
    },
    Done,
}

impl Trees {
    fn new(n: usize) -> Self {
        let state = if n == 0 {
            State::Leaf { done: false }
        } else {
            State::Split {
                left_size: 0,
                left: Box::new(Trees::new(0)),
                current_left: None,
                right: Box::new(Trees::new(n - 1)),
            }
        };
        Trees { n, state }
    }
}

impl Iterator for Trees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let n = self.n;
        match &mut self.state {
            State::Done => None,
            State::Leaf { done } => {
                if *done {
                    None
                } else {
                    *done = true;
                    Some(leaf())
                }
            }
            State::Split {
                left_size,
                left,
                current_left,
                right,
            } => loop {
                if current_left.is_none() {
                    match left.next() {
                        Some(l) => {
                            *current_left = Some(l);
                            **right = Trees::new(n - 1 - *left_size);
                        }
                        None => {
                            *left_size += 1;
                            if *left_size == n {
                                self.state = State::Done;
                                return None;
                            }
                            **left = Trees::new(*left_size);
                            continue;
                        }
                    }
                }
                match right.next() {
                    Some(r) => {
                        let l = current_left.as_ref().expect("left set").clone();
                        return Some(wedge(l, r));
                    }
                    None => *current_left = None,
                }
            },
        }
    }
}

/// Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan<T: Scalar>(n: usize) -> T {
    crate::num::binomial::<T>(2 * n, n) / crate::num::from_usize::<T>(n + 1)
}
