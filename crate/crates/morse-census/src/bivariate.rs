//! Bivariate polynomials with a total-degree cap, used to expand the
//! integrand of the geometric generating function before it is collapsed
//! back to one variable.

use num_rational::BigRational;
use num_traits::Zero;

/// Dense polynomial in two variables, storing every monomial `x^a y^b` with
/// `a + b <= cap`. Multiplication drops monomials beyond the cap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariatePoly {
    cap: usize,
    coeffs: Vec<BigRational>, // triangular layout, see index()
}

impl BivariatePoly {
    pub fn zero(cap: usize) -> Self {
        let len = (cap + 1) * (cap + 2) / 2;
        BivariatePoly {
            cap,
            coeffs: vec![BigRational::zero(); len],
        }
    }

    pub fn constant(cap: usize, c: BigRational) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = c;
        p
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn index(&self, a: usize, b: usize) -> usize {
        // monomials grouped by total degree d = a + b, then by a
        let d = a + b;
        d * (d + 1) / 2 + a
    }

    pub fn coeff(&self, a: usize, b: usize) -> &BigRational {
        &self.coeffs[self.index(a, b)]
    }

    pub fn set_coeff(&mut self, a: usize, b: usize, c: BigRational) {
        assert!(a + b <= self.cap, "monomial exceeds the total-degree cap");
        let i = self.index(a, b);
        self.coeffs[i] = c;
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.cap, other.cap);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BivariatePoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cap, other.cap);
        let mut out = Self::zero(self.cap);
        for d1 in 0..=self.cap {
            for a1 in 0..=d1 {
                let c1 = self.coeff(a1, d1 - a1);
                if c1.is_zero() {
                    continue;
                }
                for d2 in 0..=(self.cap - d1) {
                    for a2 in 0..=d2 {
                        let c2 = other.coeff(a2, d2 - a2);
                        if c2.is_zero() {
                            continue;
                        }
                        let i = out.index(a1 + a2, d1 + d2 - a1 - a2);
                        out.coeffs[i] += c1 * c2;
                    }
                }
            }
        }
        out
    }

    /// Iterate over nonzero monomials as `(a, b, coefficient)`.
    pub fn monomials(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        (0..=self.cap)
            .flat_map(move |d| (0..=d).map(move |a| (a, d - a)))
            .filter_map(move |(a, b)| {
                let c = self.coeff(a, b);
                (!c.is_zero()).then_some((a, b, c))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn mul_respects_cap() {
        // (x + y)^2 with cap 2 keeps everything; with cap 1 it is dropped
        let mut p = BivariatePoly::zero(2);
        p.set_coeff(1, 0, int(1));
        p.set_coeff(0, 1, int(1));
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(2, 0), &int(1));
        assert_eq!(sq.coeff(1, 1), &int(2));
        assert_eq!(sq.coeff(0, 2), &int(1));

        let mut q = BivariatePoly::zero(1);
        q.set_coeff(1, 0, int(1));
        q.set_coeff(0, 1, int(1));
        assert!(q.mul(&q).monomials().next().is_none());
    }
}
