//! Counts of planar Morse profiles.
//!
//! `f_n` is the number of profiles with `2n + 2` vertices. Three routes are
//! implemented: the closed form `C(3n+1, n) / (n+1)`, the deconstruction
//! recurrence over the right wing, and (in the test suite) Lagrange
//! inversion of `w (1 - w)^2`. The generating series satisfies the cubic
//! `f (1 - t f)^2 = 1`, checked exactly by [`verify_cubic`].

use crate::combinat::binom;
use crate::series::TruncatedSeries;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The profile-count series `f(t) = sum f_n t^n` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileCountSeries {
    counts: Vec<BigInt>,
}

impl ProfileCountSeries {
    /// Truncation order of the underlying series.
    pub fn order(&self) -> usize {
        self.counts.len() - 1
    }

    /// The profile count `f_n`.
    pub fn count(&self, n: usize) -> &BigInt {
        &self.counts[n]
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// The counts as a rational [`TruncatedSeries`].
    pub fn series(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.counts
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// Closed form `f_n = C(3n+1, n) / (n+1)`; the division is asserted exact.
pub fn profile_count_closed(n: u64) -> BigInt {
    let b = binom(3 * n as i64 + 1, n as i64);
    let (q, r) = b.div_rem(&BigInt::from(n + 1));
    assert!(r.is_zero(), "C(3n+1, n) must be divisible by n + 1");
    q
}

/// Coefficients `f_0 .. f_N` from the deconstruction recurrence
///
/// `f_n = sum_{s=1..n} (s+1) sum_{n_0+...+n_{s-1} = n-s} f_{n_0} ... f_{n_{s-1}}`
///
/// evaluated with cached powers of the series `t f`.
pub fn profile_series_recurrence(n_max: usize) -> ProfileCountSeries {
    let mut f: Vec<BigInt> = vec![BigInt::one()];
    // powers[s - 1][k] = coefficient of t^k in f^s; row s only ever needs
    // entries with s + k <= n, filled one per iteration below.
    let mut powers: Vec<Vec<BigInt>> = Vec::new();
    for n in 1..=n_max {
        let mut total = BigInt::zero();
        for s in 1..=n {
            let k = n - s;
            let entry = if s == 1 {
                f[k].clone()
            } else {
                let mut acc = BigInt::zero();
                for j in 0..=k {
                    acc += &f[j] * &powers[s - 2][k - j];
                }
                acc
            };
            if s > powers.len() {
                powers.push(Vec::new());
            }
            powers[s - 1].push(entry);
            debug_assert_eq!(powers[s - 1].len(), k + 1);
            total += (s as i64 + 1) * &powers[s - 1][k];
        }
        f.push(total);
    }
    ProfileCountSeries { counts: f }
}

/// Residual `f (1 - t f)^2 - 1` truncated at order `n_max`, with `f` taken
/// from the recurrence. The contract is that the residual is identically
/// zero; callers assert [`TruncatedSeries::is_zero`] on the result.
pub fn verify_cubic(n_max: usize) -> TruncatedSeries {
    let f = profile_series_recurrence(n_max).series();
    let order = f.order();
    let t = if order == 0 {
        TruncatedSeries::zero(0)
    } else {
        TruncatedSeries::identity(order)
    };
    let one = TruncatedSeries::one(order);
    let one_minus_tf = &one - &(&t * &f);
    &(&(&f * &one_minus_tf) * &one_minus_tf) - &one
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_small() {
        assert_eq!(profile_count_closed(0), BigInt::from(1));
        assert_eq!(profile_count_closed(2), BigInt::from(7));
        assert_eq!(profile_count_closed(9), BigInt::from(690_690));
    }

    #[test]
    fn recurrence_small() {
        let f = profile_series_recurrence(6);
        let want = [1, 2, 7, 30, 143, 728, 3876];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(f.count(n), &BigInt::from(*w), "f_{n}");
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let f = profile_series_recurrence(30);
        for n in 0..=30 {
            assert_eq!(f.count(n), &profile_count_closed(n as u64), "n = {n}");
        }
    }

    #[test]
    fn lagrange_route_matches() {
        // w = t f(t) is the compositional inverse of Z = w (1 - w)^2, so
        // f_n is coefficient n + 1 of the inverse.
        let mut z = TruncatedSeries::from_ints(&[0, 1, -2, 1]).with_order(16);
        z = z.with_order(16);
        let w = z.lagrange_invert();
        for n in 0..=15u64 {
            let c = w.coeff(n as usize + 1);
            assert!(c.is_integer());
            assert_eq!(c.to_integer(), profile_count_closed(n), "n = {n}");
        }
    }

    #[test]
    fn cubic_residual_is_zero() {
        for n in [0, 9, 15] {
            assert!(verify_cubic(n).is_zero(), "residual at order {n}");
        }
    }
}
