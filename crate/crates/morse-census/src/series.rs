//! Dense truncated formal power series over big rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients of `t^0 .. t^N` exactly,
//! where `N` is the truncation order. All arithmetic is closed under the
//! stated truncation; equality is coefficient-wise exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Univariate formal power series truncated at a fixed order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>, // length = order + 1
}

impl TruncatedSeries {
    /// Series with the given coefficients for `t^0 .. t^N`; the truncation
    /// order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the t^0 coefficient"
        );
        TruncatedSeries { coeffs }
    }

    /// Series with the given integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The zero series of truncation order `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1 of truncation order `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `t` of truncation order `order` (>= 1).
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1);
        let mut s = Self::zero(order);
        s.coeffs[1] = BigRational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; `k` must not exceed the truncation order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Copy truncated (or zero-extended) to the given order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `1 / sqrt(self)`, requiring constant term 1.
    ///
    /// With `r = self - 1` (no constant term) this is the binomial series
    /// `sum_k C(-1/2, k) r^k`; powers beyond the truncation order vanish, so
    /// `k <= N` terms suffice.
    pub fn inv_sqrt(&self) -> Self {
        assert!(
            self.coeffs[0].is_one(),
            "inv_sqrt requires constant term 1, got {}",
            self.coeffs[0]
        );
        let n = self.order();
        let mut r = self.clone();
        r.coeffs[0] -= BigRational::one();
        let mut result = Self::one(n);
        let mut power = Self::one(n);
        let mut coeff = BigRational::one();
        for k in 1..=n as i64 {
            // C(-1/2, k) / C(-1/2, k-1) = -(2k - 1) / (2k)
            coeff *= BigRational::new(BigInt::from(-(2 * k - 1)), BigInt::from(2 * k));
            power = &power * &r;
            result = &result + &power.scale(&coeff);
        }
        result
    }

    /// Term-wise antiderivative with zero constant term; the result has
    /// truncation order `N + 1`.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / BigRational::from_integer(BigInt::from(k as i64 + 1)));
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Self {
        assert!(
            !self.coeffs[0].is_zero(),
            "reciprocal requires a unit constant term"
        );
        let n = self.order();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = self.coeffs[0].recip();
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                acc += &self.coeffs[j] * &inv.coeffs[i - j];
            }
            inv.coeffs[i] = -acc / &self.coeffs[0];
        }
        inv
    }

    /// Composition `self(inner)` by Horner evaluation; `inner` must have zero
    /// constant term so the truncation is well defined.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeffs[0].is_zero(),
            "composition needs inner constant term 0"
        );
        let n = inner.order();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc.coeffs[0] += c;
        }
        acc
    }

    /// Compositional inverse: returns `w` with `self(w(t)) = t` modulo
    /// `t^{N+1}`. Requires `self(0) = 0` and a nonzero linear term.
    ///
    /// Coefficient `n` of `w` is `(1/n) [u^{n-1}] (u / self(u))^n`, computed
    /// with incrementally maintained powers of `u / self(u)`.
    pub fn lagrange_invert(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "lagrange_invert requires Z(0) = 0"
        );
        assert!(
            !self.coeffs[1].is_zero(),
            "lagrange_invert requires Z'(0) != 0"
        );
        let n = self.order();
        // g = Z / t, truncated at order n - 1
        let g = TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        };
        let h = g.reciprocal(); // (t / Z)^1
        let mut w = Self::zero(n);
        let mut power = h.clone();
        for k in 1..=n {
            w.coeffs[k] = &power.coeffs[k - 1] / BigRational::from_integer(BigInt::from(k as i64));
            if k < n {
                power = &power * &h;
            }
        }
        w
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TruncatedSeries{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "truncation orders must match");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "truncation orders must match");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated at the common order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "truncation orders must match");
        let n = self.order();
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}
