use nonassoc::double_minus::count_formula;
use nonassoc::series::{
    average_leaf_depth, cprime, cprime_closed, depth_totals, gf_bivariate_table, gf_coeffs,
    series_divide, skipping_sum_closed, skipping_sum_direct, EisensteinInt,
};
use nonassoc::{catalan, Count, CountTable, EnumCap, Rational, SignedCount};
use num_traits::{One, Zero};
use proptest::prelude::*;

type E = EisensteinInt<i64>;

fn arb_eisenstein() -> impl Strategy<Value = E> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| E::new(a, b))
}

/// Embeds `a + bω` in the complex plane; used only to spot-check the
/// multiplication law.
fn to_complex(z: &E) -> (f64, f64) {
    let (re_w, im_w) = (-0.5, 3f64.sqrt() / 2.0);
    (z.a as f64 + z.b as f64 * re_w, z.b as f64 * im_w)
}

proptest! {
    #[test]
    fn ring_axioms(x in arb_eisenstein(), y in arb_eisenstein(), z in arb_eisenstein()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() - x.clone(), E::zero());
        prop_assert_eq!(x.clone() * E::one(), x.clone());
    }

    #[test]
    fn multiplication_matches_complex_embedding(x in arb_eisenstein(), y in arb_eisenstein()) {
        let (a, b) = to_complex(&x);
        let (c, d) = to_complex(&y);
        let (re, im) = to_complex(&(x * y));
        prop_assert!((re - (a * c - b * d)).abs() < 1e-6);
        prop_assert!((im - (a * d + b * c)).abs() < 1e-6);
    }
}

#[test]
fn cube_root_identities() {
    let w = E::omega();
    assert_eq!(w.pow(2), E::new(-1, -1));
    assert_eq!(w.pow(3), E::one());
    assert!((E::one() + w.clone() + w.pow(2)).is_zero());
}

#[test]
fn skipping_sum_identity() {
    for n in 0..=64 {
        for k in 0..3 {
            assert_eq!(
                skipping_sum_direct::<SignedCount>(n, k),
                skipping_sum_closed::<SignedCount>(n, k),
                "n={n}, k={k}"
            );
        }
        let total: SignedCount = (0..3)
            .map(|k| skipping_sum_direct::<SignedCount>(n, k))
            .sum();
        assert_eq!(total, SignedCount::one() << n);
    }
}

#[test]
fn cprime_matches_closed_form() {
    for n in 1..=64 {
        assert_eq!(cprime::<Count>(n), cprime_closed::<Count>(n), "n={n}");
        let shifted = count_formula::<Count>(n) + u8::from(n.is_multiple_of(2));
        assert_eq!(cprime::<Count>(n), shifted);
    }
    assert_eq!(cprime::<u64>(5), 21);
}

#[test]
fn gf_recurrence_and_division() {
    let c = gf_coeffs::<Count>(200);
    assert_eq!(c[0], Count::one());
    for n in 3..c.len() {
        assert_eq!(
            c[n].clone() + c[n - 3].clone() * 2u8,
            c[n - 1].clone() * 2u8 + c[n - 2].clone()
        );
    }
    // (1+x)(1-x)(1-2x) = 1 - 2x - x^2 + 2x^3
    let divided = series_divide(&[1], &[1, -2, -1, 2], 10);
    let first: Vec<i64> = c[..10].iter().map(|v| i64::try_from(v).unwrap()).collect();
    assert_eq!(divided, first);
}

#[test]
fn gf_is_index_shifted_counts() {
    let c = gf_coeffs::<Count>(31);
    for (n, coeff) in c.iter().enumerate() {
        assert_eq!(*coeff, count_formula::<Count>(n + 1), "x^{n}");
    }
    // As written, Σ C_n x^n would need coefficient C_1 = 1 at x^1; the series has 2.
    assert_ne!(c[1], count_formula::<Count>(1));
}

#[test]
fn bivariate_table_is_refined_table() {
    let t = gf_bivariate_table(12);
    assert_eq!(
        t,
        CountTable::from_bruteforce(12, EnumCap::default()).unwrap()
    );
    assert_eq!(t.get(0, 1), Some(&Count::one()));
    for n in 0..=12 {
        assert_eq!(t.row_sum(n), count_formula::<Count>(n));
    }
}

#[test]
fn average_depth_two_ways() {
    for n in 0..=10 {
        let totals = depth_totals(n, EnumCap::default()).unwrap();
        let by_index: Count = totals.per_leaf_index.iter().sum();
        assert_eq!(by_index, totals.per_tree);
        assert_eq!(totals.trees, catalan::<Count>(n));
        let avg = average_leaf_depth(n, EnumCap::default()).unwrap();
        assert_eq!(
            avg * Rational::from_integer(Count::from(n + 1) * catalan::<Count>(n)),
            Rational::from_integer(totals.per_tree)
        );
    }
    assert_eq!(
        average_leaf_depth(2, EnumCap::default())
            .unwrap()
            .to_string(),
        "5/3"
    );
    assert_eq!(
        average_leaf_depth(3, EnumCap::default())
            .unwrap()
            .to_string(),
        "11/5"
    );
}
