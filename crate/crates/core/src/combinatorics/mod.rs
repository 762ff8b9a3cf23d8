//! Exact combinatorial building blocks: binomials, factorials, both kinds of
//! Stirling numbers, Stirling polynomials and elementary symmetric functions.
//!
//! Everything here is exact. Rationals are [`BigRational`] (always in lowest
//! terms with a positive denominator) and counts are [`BigUint`].

mod polynomial;
mod scaled;
mod stirling;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use num_rational::BigRational;
pub use polynomial::RationalPolynomial;
pub(crate) use scaled::ScaledPolynomial;
pub use stirling::{
    stirling1_unsigned, stirling1_unsigned_row, stirling2, stirling2_row, stirling2_rows,
    stirling_polynomial,
};

/// `C(n, k)`, taken to be zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Each partial product C(n-k+i, i) is an integer, so the division is exact.
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n (n-1) ⋯ (n-k+1)`, i.e. `n! / (n-k)!`; zero when `k > n`.
pub fn falling_factorial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (n - k + 1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Elementary symmetric functions `(E_0, E_1, …, E_d)` of `values`, read off
/// as the coefficients of `∏ (1 + a_i t)`.
pub fn elementary_symmetric(values: &[BigRational]) -> Vec<BigRational> {
    let mut e = elementary_symmetric_scaled(values).to_rational_coeffs();
    e.resize(values.len() + 1, BigRational::zero());
    e
}

/// `∏ (1 + a_i t)` over a common denominator. Zero values are skipped, so
/// the result has length `1 + #{a_i ≠ 0}`.
pub(crate) fn elementary_symmetric_scaled(values: &[BigRational]) -> ScaledPolynomial {
    let mut e = ScaledPolynomial::one();
    for a in values {
        e.mul_linear(a);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(30, 15), BigUint::from(155_117_520u32));
    }

    #[test]
    fn binomial_satisfies_pascal() {
        for n in 1..40u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(falling_factorial(5, 2), BigUint::from(20u32));
        assert_eq!(falling_factorial(5, 0), BigUint::one());
        assert_eq!(falling_factorial(3, 4), BigUint::zero());
    }

    #[test]
    fn elementary_symmetric_of_nothing() {
        assert_eq!(elementary_symmetric(&[]), vec![BigRational::one()]);
    }

    #[test]
    fn elementary_symmetric_of_ones_is_binomial() {
        for n in 0..25u64 {
            let e = elementary_symmetric(&vec![BigRational::one(); n as usize]);
            for (j, ej) in e.iter().enumerate() {
                assert_eq!(*ej, BigRational::from_integer(binomial(n, j as i64).into()));
            }
        }
    }

    #[test]
    fn elementary_symmetric_of_harmonic_values() {
        // E_j(1, 1/2, ..., 1/n) = c(n+1, j+1) / n!
        for n in 1..20usize {
            let values: Vec<_> = (1..=n as i64).map(|i| q(1, i)).collect();
            let e = elementary_symmetric(&values);
            let nf = BigInt::from(factorial(n as u64));
            for (j, ej) in e.iter().enumerate() {
                let expect = BigRational::new(stirling1_unsigned(n + 1, j + 1).into(), nf.clone());
                assert_eq!(*ej, expect, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn harmonic_values_do_not_follow_reversed_first_kind_index() {
        // The reversed index c(n+1, n+2-j)/n! already disagrees at n = 2, j = 1.
        let e = elementary_symmetric(&[q(1, 1), q(1, 2)]);
        assert_eq!(e[1], q(3, 2));
        let reversed = BigRational::new(stirling1_unsigned(3, 3).into(), BigInt::from(2));
        assert_ne!(e[1], reversed);
    }

    /// Oracle for `S(n, k)`: count set partitions of `{0..n}` by growing
    /// restricted-growth strings.
    fn count_set_partitions(n: usize) -> Vec<u64> {
        fn go(i: usize, n: usize, blocks: usize, counts: &mut [u64]) {
            if i == n {
                counts[blocks] += 1;
                return;
            }
            for b in 0..=blocks {
                go(i + 1, n, blocks.max(b + 1), counts);
            }
        }
        let mut counts = vec![0; n + 1];
        go(0, n, 0, &mut counts);
        counts
    }

    #[test]
    fn stirling2_matches_partition_enumeration() {
        for n in 0..=12 {
            let counts = count_set_partitions(n);
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(stirling2(n, k), BigUint::from(*c), "S({n},{k})");
            }
        }
    }

    #[test]
    fn stirling2_decomposes_powers_into_falling_factorials() {
        for n in 0..=20usize {
            for x in 0..=10u64 {
                let lhs: BigUint = (0..=n)
                    .map(|k| stirling2(n, k) * falling_factorial(x, k as u64))
                    .sum();
                assert_eq!(lhs, BigUint::from(x).pow(n as u32), "n={n} x={x}");
            }
        }
    }

    fn rational() -> impl Strategy<Value = BigRational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn rational_arithmetic_is_exact(a in rational(), c in rational()) {
            prop_assert_eq!((&a + &c) - &c, a.clone());
            prop_assert!(*a.denom() > BigInt::zero());
        }

        #[test]
        fn elementary_symmetric_is_order_independent(
            values in prop::collection::vec(rational(), 0..8),
            seed in any::<u64>(),
        ) {
            let mut shuffled = values.clone();
            // Deterministic Fisher-Yates from the seed.
            let mut s = seed;
            for i in (1..shuffled.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                shuffled.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(elementary_symmetric(&values), elementary_symmetric(&shuffled));
        }
    }
}
