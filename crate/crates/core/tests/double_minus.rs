mod common;

use common::REFINED_TRIANGLE;
use nonassoc::double_minus::{
    a000975, count_distinct_bruteforce, count_formula, refined_count_formula,
    refined_counts_bruteforce, sign_parity, A000975Method,
};
use nonassoc::num::pow2;
use nonassoc::{enumerate_trees, Count, EnumCap};

fn cap() -> EnumCap {
    EnumCap::default()
}

#[test]
fn literal_evaluation_agrees_with_parity_dedup() {
    for n in 0..=11 {
        let distinct = common::distinct_values(enumerate_trees(n, cap()).unwrap());
        assert_eq!(
            Count::from(distinct),
            count_distinct_bruteforce(n, cap()).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn sign_expansion_matches_parity() {
    for n in 0..=8 {
        for t in enumerate_trees(n, cap()).unwrap() {
            let p = sign_parity(&t);
            let expected: i128 = p
                .bits()
                .iter()
                .enumerate()
                .map(|(i, &b)| if b == 0 { 1i128 << i } else { -(1i128 << i) })
                .sum();
            assert_eq!(common::evaluate_double_minus(&t), expected);
        }
    }
}

#[test]
fn bruteforce_equals_closed_form() {
    for n in 1..=13 {
        assert_eq!(
            count_distinct_bruteforce(n, cap()).unwrap(),
            count_formula::<Count>(n),
            "n={n}"
        );
    }
    assert_eq!(count_formula::<Count>(5), Count::from(21u8));
}

#[test]
fn refined_table_verbatim() {
    for (n, cells) in REFINED_TRIANGLE.iter().enumerate() {
        let row = refined_counts_bruteforce(n, cap()).unwrap();
        assert_eq!(row.len(), n + 2);
        for (r, value) in row.iter().enumerate() {
            let expected = cells.iter().find(|(rr, _)| *rr == r).map_or(0, |c| c.1);
            assert_eq!(*value, Count::from(expected), "n={n}, r={r}");
            if n >= 1 {
                assert_eq!(refined_count_formula::<Count>(n, r).unwrap(), *value);
            }
        }
        let sum: Count = row.iter().sum();
        assert_eq!(sum, count_formula::<Count>(n), "row sum n={n}");
    }
}

#[test]
fn refinement_identity_to_fourteen() {
    for n in 13..=14 {
        let row = refined_counts_bruteforce(n, cap()).unwrap();
        let sum: Count = row.iter().sum();
        assert_eq!(sum, count_formula::<Count>(n));
        for (r, v) in row.iter().enumerate() {
            assert_eq!(*v, refined_count_formula::<Count>(n, r).unwrap());
        }
    }
}

#[test]
fn zero_cells_off_residue() {
    for n in 1..=40 {
        for r in 0..=n + 1 {
            if (n + r) % 3 != 1 {
                assert_eq!(refined_count_formula::<u64>(n, r).unwrap(), 0);
            }
        }
    }
}

#[test]
fn tree_parities_satisfy_residue() {
    for n in 0..=12 {
        for t in enumerate_trees(n, cap()).unwrap() {
            assert_eq!((n + sign_parity(&t).zeros()) % 3, 1);
        }
    }
}

#[test]
fn recurrences_to_512() {
    for n in 2..=512 {
        let lhs = count_formula::<Count>(n) + count_formula::<Count>(n - 1) + 1u8;
        assert_eq!(lhs, pow2::<Count>(n), "n={n}");
    }
    for n in 1..=512usize {
        let odd_even = if n.is_multiple_of(2) {
            pow2::<Count>(n + 1) + 1u8
        } else {
            pow2::<Count>(n + 1) - 1u8
        };
        assert_eq!(
            count_formula::<Count>(n) + u8::from(n.is_multiple_of(2)),
            odd_even / 3u8
        );
    }
}

#[test]
fn characterizations_agree() {
    for n in 1..=512 {
        let values: Vec<Count> = A000975Method::ALL
            .iter()
            .map(|&m| a000975(n, m).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]), "n={n}");
        assert_eq!(values[0], count_formula::<Count>(n));
    }
    // Machine-width scalars agree while they do not overflow.
    for n in 1..=60 {
        for m in A000975Method::ALL {
            assert_eq!(
                Count::from(a000975::<u64>(n, m).unwrap()),
                a000975::<Count>(n, m).unwrap()
            );
        }
    }
}

#[test]
fn alternating_binary_digits() {
    for n in 1..=64 {
        let v: Count = a000975(n, A000975Method::AlternatingBinary).unwrap();
        let digits = v.to_str_radix(2);
        assert_eq!(digits.len(), n);
        assert!(digits
            .chars()
            .enumerate()
            .all(|(i, c)| c == if i.is_multiple_of(2) { '1' } else { '0' }));
    }
}
