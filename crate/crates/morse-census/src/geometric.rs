//! Geometric equivalence classes, counted three independent ways.
//!
//! - [`GeomCountTable`]: the two-parameter integer recurrence on
//!   `f_n(m)` / `F_n(m)`, where `m` tracks the level of the lowest
//!   branch vertex. `F_n(1)` is the number of classes of order `n`.
//! - [`HhatTable`]: the same numbers after rescaling by two factorials,
//!   computed over exact rationals; `H(0, n)` recovers `F_n(1)`.
//! - [`theta_series`] / [`xi_series`]: the exponential generating function
//!   route. `theta(s)` is the series of an elliptic-type integral and the
//!   class counts appear in the odd Taylor coefficients of its compositional
//!   inverse.

use crate::bivariate::BivariatePoly;
use crate::combinat::{binom, factorial};
use crate::series::TruncatedSeries;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Intended operating depth for the integer-count tables. Everything stays
/// exact at any order, but past this point the factorial rescale in
/// [`HhatTable::integer_count`] dominates the output size and reading
/// [`HhatTable::hhat`] directly is the better interface.
pub const DEFAULT_MAX_ORDER: usize = 25;

/// Table of the counts `f_n(m)` (lowest node exactly at level `m + 1`) and
/// `F_n(m) = sum_{k >= m} f_n(k)` for `1 <= m <= n + 1`.
#[derive(Clone, Debug)]
pub struct GeomCountTable {
    mu_exact: Vec<Vec<BigInt>>,    // [n][m - 1] = f_n(m)
    mu_at_least: Vec<Vec<BigInt>>, // [n][m - 1] = F_n(m)
}

impl GeomCountTable {
    /// Fill the table bottom-up in `n` from the recurrence
    ///
    /// `f_n(m) = C(m, 2) F_{n-1}(m-1)
    ///   + (m/2) sum_{m1+m2 = m-1} sum_{n1+n2 = n-1}
    ///     C(m-1, m1) C(2n-m+1, 2 n1 - m1 + 1) F_{n1}(m1+1) F_{n2}(m2+1)`
    ///
    /// with base `F_0(1) = 1` and the conventions `F_n(m) = F_n(1)` for
    /// `m <= 0` and `F_n(m) = 0` for `m > n + 1`. The `m/2` factor is applied
    /// as an exact rational and the result asserted integral, which would
    /// catch any transcription slip in the binomials.
    pub fn build(n_max: usize) -> Self {
        let mut table = GeomCountTable {
            mu_exact: vec![vec![BigInt::one()]],
            mu_at_least: vec![vec![BigInt::one()]],
        };
        for n in 1..=n_max {
            let mut row = Vec::with_capacity(n + 1);
            for m in 1..=(n + 1) {
                row.push(table.mu_exact_term(n, m));
            }
            let mut cumulative = vec![BigInt::zero(); n + 1];
            let mut acc = BigInt::zero();
            for m in (1..=(n + 1)).rev() {
                acc += &row[m - 1];
                cumulative[m - 1] = acc.clone();
            }
            table.mu_exact.push(row);
            table.mu_at_least.push(cumulative);
        }
        table
    }

    fn mu_exact_term(&self, n: usize, m: usize) -> BigInt {
        let (ni, mi) = (n as i64, m as i64);
        let first = binom(mi, 2) * self.cumulative(n - 1, mi - 1);
        let mut sum = BigInt::zero();
        for m1 in 0..m {
            let m2 = m - 1 - m1;
            for n1 in 0..n {
                let n2 = n - 1 - n1;
                let b1 = binom(mi - 1, m1 as i64);
                let b2 = binom(2 * ni - mi + 1, 2 * n1 as i64 - m1 as i64 + 1);
                if b1.is_zero() || b2.is_zero() {
                    continue;
                }
                sum += b1
                    * b2
                    * self.cumulative(n1, m1 as i64 + 1)
                    * self.cumulative(n2, m2 as i64 + 1);
            }
        }
        let half =
            BigRational::new(BigInt::from(mi), BigInt::from(2)) * BigRational::from_integer(sum);
        assert!(
            half.is_integer(),
            "recurrence produced a non-integral count at ({n}, {m})"
        );
        first + half.to_integer()
    }

    pub fn max_order(&self) -> usize {
        self.mu_exact.len() - 1
    }

    /// `f_n(m)`: classes of order `n` whose lowest node is at level `m + 1`.
    /// Zero outside `1 <= m <= n + 1`.
    pub fn mu_exact(&self, n: usize, m: i64) -> BigInt {
        if m < 1 || m > n as i64 + 1 {
            BigInt::zero()
        } else {
            self.mu_exact[n][(m - 1) as usize].clone()
        }
    }

    /// `F_n(m)`, with `F_n(m) = F_n(1)` for `m <= 0` and zero above `n + 1`.
    pub fn cumulative(&self, n: usize, m: i64) -> BigInt {
        if m > n as i64 + 1 {
            BigInt::zero()
        } else if m <= 0 {
            self.mu_at_least[n][0].clone()
        } else {
            self.mu_at_least[n][(m - 1) as usize].clone()
        }
    }

    /// `F_n(1)`: the number of geometric classes of order `n`.
    pub fn geometric_classes(&self, n: usize) -> &BigInt {
        &self.mu_at_least[n][0]
    }
}

/// Number of geometric equivalence classes of order `n`.
pub fn count_geometric_classes(n: usize) -> BigInt {
    GeomCountTable::build(n).geometric_classes(n).clone()
}

/// Rescaled table `Hhat(x, y) = H(x, y) / (x! (x + 2y + 1)!)` where
/// `H(x, y) = F_{x+y}(x + 1)`, built by the recurrence it satisfies.
#[derive(Clone, Debug)]
pub struct HhatTable {
    x_max: usize,
    y_max: usize,
    values: BTreeMap<(usize, usize), BigRational>,
}

impl HhatTable {
    /// Fill rescaled values in order of `k = x + y`:
    /// the `y = 0` row is `2^{-x}`; for `x > 0`,
    ///
    /// `(x + 2y + 1) Hhat(x, y) = (x+1) Hhat(x+1, y-1)
    ///    + (x+1)/2 Hhat(x-1, y) + (x+1)/2 sum_{R} Hhat(x1, y1) Hhat(x2, y2)`
    ///
    /// and for `x = 0`,
    ///
    /// `(2y + 1) Hhat(0, y) = Hhat(1, y-1) + 1/2 sum_{R} Hhat(0, y1) Hhat(0, y2)`,
    ///
    /// where the convolution runs over the rectangle `0 <= x1 <= x`,
    /// `0 <= y1 <= y - 1` with the reflected partner
    /// `(x2, y2) = (x - x1, y - 1 - y1)`.
    pub fn build(x_max: usize, y_max: usize) -> Self {
        let mut values = BTreeMap::new();
        values.insert((0, 0), BigRational::one());
        let total = x_max + y_max;
        for k in 1..=total {
            for y in 0..=y_max.min(k) {
                let x = k - y;
                let value = if y == 0 {
                    BigRational::new(BigInt::one(), BigInt::from(2).pow(x as u32))
                } else {
                    let lift = &values[&(x + 1, y - 1)];
                    let mut conv = BigRational::zero();
                    for x1 in 0..=x {
                        for y1 in 0..y {
                            conv += &values[&(x1, y1)] * &values[&(x - x1, y - 1 - y1)];
                        }
                    }
                    let half = BigRational::new(BigInt::one(), BigInt::from(2));
                    let xp1 = BigRational::from_integer(BigInt::from(x as i64 + 1));
                    if x > 0 {
                        let drop = &values[&(x - 1, y)];
                        (&xp1 * lift + &xp1 * &half * drop + xp1 * half * conv)
                            / BigRational::from_integer(BigInt::from((x + 2 * y + 1) as i64))
                    } else {
                        (lift + half * conv)
                            / BigRational::from_integer(BigInt::from(2 * y as i64 + 1))
                    }
                };
                values.insert((x, y), value);
            }
        }
        HhatTable {
            x_max,
            y_max,
            values,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.x_max, self.y_max)
    }

    /// The rescaled value `Hhat(x, y)`.
    pub fn hhat(&self, x: usize, y: usize) -> &BigRational {
        &self.values[&(x, y)]
    }

    /// The integer count `H(x, y) = x! (x + 2y + 1)! Hhat(x, y)`, asserted
    /// to be a nonnegative integer. `H(0, n)` is the number of geometric
    /// classes of order `n`, and `H(x, y) = F_{x+y}(x + 1)` in general.
    pub fn integer_count(&self, x: usize, y: usize) -> BigInt {
        let scaled = BigRational::from_integer(factorial(x as u64))
            * BigRational::from_integer(factorial((x + 2 * y + 1) as u64))
            * self.hhat(x, y);
        assert!(scaled.is_integer(), "H({x}, {y}) is not an integer");
        let v = scaled.to_integer();
        assert!(v.sign() != Sign::Minus, "H({x}, {y}) is negative");
        v
    }
}

/// The series `theta(s)` of the integral of `P_s(tau)^{-1/2}` over
/// `tau in [0, s]`, with `P_s(tau) = tau^4/4 - tau^2 + 2 s tau + 1`,
/// truncated at order `2 n_max + 1`.
///
/// `P_s` is expanded as a [`BivariatePoly`] in `(s, tau)` with total-degree
/// cap `2 n_max + 2` (sufficient: the integrand only needs total degree
/// `2 n_max`, and the perturbation `r = P_s - 1` has no constant term).
/// Integration sends `s^a tau^b` to `s^{a+b+1} / (b + 1)`.
pub fn theta_series(n_max: usize) -> TruncatedSeries {
    assert!(n_max >= 1);
    let cap = 2 * n_max + 2;
    let order = 2 * n_max + 1;

    let mut r = BivariatePoly::zero(cap);
    r.set_coeff(1, 1, BigRational::from_integer(BigInt::from(2)));
    r.set_coeff(0, 2, BigRational::from_integer(BigInt::from(-1)));
    r.set_coeff(0, 4, BigRational::new(BigInt::one(), BigInt::from(4)));

    // P^{-1/2} = sum_k C(-1/2, k) r^k; r^k has total degree >= 2k
    let mut integrand = BivariatePoly::constant(cap, BigRational::one());
    let mut power = BivariatePoly::constant(cap, BigRational::one());
    let mut coeff = BigRational::one();
    for k in 1..=(cap / 2) as i64 {
        coeff *= BigRational::new(BigInt::from(-(2 * k - 1)), BigInt::from(2 * k));
        power = power.mul(&r);
        integrand.add_assign(&power.scale(&coeff));
    }

    let mut theta = vec![BigRational::zero(); order + 1];
    for (a, b, c) in integrand.monomials() {
        let d = a + b + 1;
        if d <= order {
            theta[d] += c / BigRational::from_integer(BigInt::from(b as i64 + 1));
        }
    }
    TruncatedSeries::from_coeffs(theta)
}

/// Compositional inverse of [`theta_series`]; the class count of order `n`
/// is `(2n + 1)!` times the coefficient of `t^{2n+1}`.
pub fn xi_series(n_max: usize) -> TruncatedSeries {
    theta_series(n_max).lagrange_invert()
}

/// The class counts `xi_0 .. xi_{n_max}` extracted from [`xi_series`].
/// Asserts that every even coefficient vanishes and that every
/// `(2n+1)! [t^{2n+1}] xi` is a nonnegative integer.
pub fn xi_class_counts(n_max: usize) -> Vec<BigInt> {
    let xi = xi_series(n_max);
    for k in (0..=xi.order()).step_by(2) {
        assert!(
            xi.coeff(k).is_zero(),
            "even coefficient t^{k} of xi must vanish"
        );
    }
    (0..=n_max)
        .map(|n| {
            let scaled =
                BigRational::from_integer(factorial(2 * n as u64 + 1)) * xi.coeff(2 * n + 1);
            assert!(scaled.is_integer(), "xi_{n} is not an integer");
            let v = scaled.to_integer();
            assert!(v.sign() != Sign::Minus, "xi_{n} is negative");
            v
        })
        .collect()
}
