//! Binomial-family helpers over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`, defined to be zero outside the range
/// `0 <= k <= n` (including negative `n`). Recurrences elsewhere rely on
/// the total definition so they need no range guards.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    // product of k consecutive integers is divisible by k!
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// The `n`-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    let b = binom(2 * n as i64, n as i64);
    let (q, r) = num_integer::Integer::div_rem(&b, &BigInt::from(n + 1));
    assert!(r.is_zero(), "C(2n, n) must be divisible by n + 1");
    q
}

/// Odd double factorial `1 * 3 * 5 * ... * (2n + 1)`.
pub fn odd_double_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 0..=n {
        acc *= 2 * k + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_in_range() {
        assert_eq!(binom(4, 1), BigInt::from(4));
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(10, 0), BigInt::from(1));
        assert_eq!(binom(0, 0), BigInt::from(1));
    }

    #[test]
    fn binom_outside_range_is_zero() {
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(2, -1), BigInt::zero());
        assert_eq!(binom(-2, 0), BigInt::zero());
    }

    #[test]
    fn catalan_small() {
        let want = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigInt::from(*w));
        }
    }

    #[test]
    fn odd_double_factorial_small() {
        assert_eq!(odd_double_factorial(0), BigInt::from(1));
        assert_eq!(odd_double_factorial(2), BigInt::from(15));
        assert_eq!(odd_double_factorial(4), BigInt::from(945));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
