//! Integer scalar abstraction and the elementary exact combinatorics shared
//! by the counting modules.

use std::fmt::{Debug, Display};

use num_integer::Integer;

/// An exact integer scalar: machine integers (`u64`, `i128`, ...) or
/// `BigUint`/`BigInt`. Machine integers panic on overflow in debug builds,
/// so they are only suitable for small arguments.
pub trait Scalar: Integer + Clone + Debug + Display + From<u32> {}

impl<T> Scalar for T where T: Integer + Clone + Debug + Display + From<u32> {}

pub fn from_usize<T: Scalar>(v: usize) -> T {
    let v = u32::try_from(v).expect("argument fits in u32");
    T::from(v)
}

/// `2^n`.
pub fn pow2<T: Scalar>(n: usize) -> T {
    num_traits::pow(T::from(2), n)
}

/// `binom(n, k)`, zero when `k > n`. Multiplicative formula; every partial
/// product is an exact binomial coefficient so each division is exact.
pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * from_usize::<T>(n - i);
        acc = acc / from_usize::<T>(i + 1);
    }
    acc
}

/// Row `n` of Pascal's triangle, built additively.
pub fn binomial_row<T: Scalar>(n: usize) -> Vec<T> {
    let mut row = vec![T::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(T::one());
        for w in row.windows(2) {
            next.push(w[0].clone() + w[1].clone());
        }
        next.push(T::one());
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn binomial_matches_pascal() {
        for n in 0..40 {
            let row = binomial_row::<BigUint>(n);
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial::<BigUint>(n, k), v, "binom({n},{k})");
            }
            assert!(binomial::<u64>(n, n + 1) == 0);
        }
    }

    #[test]
    fn machine_and_big_agree() {
        for n in 0..30 {
            for k in 0..=n {
                assert_eq!(
                    BigUint::from(binomial::<u64>(n, k)),
                    binomial::<BigUint>(n, k)
                );
            }
        }
        assert_eq!(pow2::<u64>(10), 1024);
        assert_eq!(pow2::<BigUint>(100), BigUint::from(1u8) << 100usize);
    }
}
