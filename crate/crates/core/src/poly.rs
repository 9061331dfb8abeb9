//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Small support type for the determinant oracle and the expanded product
//! form of the characteristic polynomial. Coefficients are stored in
//! ascending degree order with no trailing zeros; the zero polynomial is the
//! empty vector.

use num_bigint::BigInt;
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::from(1)])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += ci * cj;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().copied().map(BigInt::from).collect())
    }

    #[test]
    fn arithmetic_basics() {
        // (x^2 - 1)(x^2 - 9) = x^4 - 10x^2 + 9
        let prod = &p(&[-1, 0, 1]) * &p(&[-9, 0, 1]);
        assert_eq!(prod, p(&[9, 0, -10, 0, 1]));

        assert_eq!(&p(&[1, 2]) + &p(&[3, -2]), p(&[4]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), Poly::zero());
        assert_eq!(-&p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn degree_and_trimming() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(Poly::from_coeffs(vec![BigInt::from(1), BigInt::zero()]), p(&[1]));
        assert_eq!(Poly::x().degree(), Some(1));
    }

    #[test]
    fn horner_eval() {
        let q = p(&[9, 0, -10, 0, 1]); // x^4 - 10x^2 + 9
        assert_eq!(q.eval(&BigInt::from(0)), BigInt::from(9));
        assert_eq!(q.eval(&BigInt::from(1)), BigInt::from(0));
        assert_eq!(q.eval(&BigInt::from(-3)), BigInt::from(0));
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(-15));
    }
}
