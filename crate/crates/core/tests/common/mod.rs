//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use nonassoc::tree::Shape;
use nonassoc::Tree;

/// Refined counts for n ≤ 12, row n: (r, C_{⊖,n,r}) for every nonzero cell.
pub const REFINED_TRIANGLE: [&[(usize, u64)]; 13] = [
    &[(1, 1)],
    &[(0, 1)],
    &[(2, 2)],
    &[(1, 4), (4, 1)],
    &[(0, 1), (3, 9)],
    &[(2, 15), (5, 6)],
    &[(1, 7), (4, 34), (7, 1)],
    &[(0, 1), (3, 56), (6, 28)],
    &[(2, 36), (5, 125), (8, 9)],
    &[(1, 10), (4, 210), (7, 120), (10, 1)],
    &[(0, 1), (3, 165), (6, 461), (9, 55)],
    &[(2, 66), (5, 792), (8, 495), (11, 12)],
    &[(1, 13), (4, 715), (7, 1715), (10, 286), (13, 1)],
];

/// Evaluates the parenthesization literally with `a ⊖ b = -a - b` on
/// `x_i = 2^i`; distinct sign patterns give distinct values.
pub fn evaluate_double_minus(t: &Tree) -> i128 {
    fn go(t: &Tree, next: &mut u32) -> i128 {
        match t.shape() {
            Shape::Leaf => {
                *next += 1;
                1i128 << (*next - 1)
            }
            Shape::Internal(a, b) => {
                let l = go(a, next);
                let r = go(b, next);
                -l - r
            }
        }
    }
    go(t, &mut 0)
}

/// Distinct values of all parenthesizations of `x0 ⊖ ... ⊖ xn`, evaluated
/// literally.
pub fn distinct_values(trees: impl Iterator<Item = Tree>) -> usize {
    trees
        .map(|t| evaluate_double_minus(&t))
        .collect::<HashSet<_>>()
        .len()
}
