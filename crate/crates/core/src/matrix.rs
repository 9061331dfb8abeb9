//! Dense integer tridiagonal matrices and an exact determinant.
//!
//! The matrix here is the `(n+1) x (n+1)` zero-diagonal tridiagonal matrix
//! `M_n` built from a [`WeightSequence`]: subdiagonal `a_1..a_n`,
//! superdiagonal `b_1..b_n`. Entries are stored densely so that the
//! determinant routines below cannot take silent shortcuts through the
//! banded structure.

use crate::weights::WeightSequence;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagonalMatrix {
    n: usize,
    entries: Vec<Vec<BigInt>>,
}

impl TridiagonalMatrix {
    pub fn from_weights(w: &WeightSequence) -> Self {
        let n = w.n();
        let mut entries = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for j in 1..=n {
            // Row/column indices are 0-based: a_j sits at (j, j-1) and b_j
            // at (j-1, j).
            entries[j][j - 1] = w.a(j).clone();
            entries[j - 1][j] = w.b(j).clone();
        }
        Self { n, entries }
    }

    /// The weight count `n`; the matrix itself is `(n+1) x (n+1)`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows (and columns), `n + 1`.
    pub fn order(&self) -> usize {
        self.n + 1
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.iter().map(Vec::as_slice)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order()).map(|i| self.entries[i][i].clone()).sum()
    }

    /// Matrix-vector product over exact rationals.
    pub fn mul_rational_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.order(), "vector length must match order");
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(m, _)| !m.is_zero())
                    .map(|(m, x)| BigRational::from_integer(m.clone()) * x)
                    .sum()
            })
            .collect()
    }

    /// The dense integer matrix `xI - M` for a concrete integer `x`.
    pub fn shifted(&self, x: &BigInt) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|m| -m).collect())
            .collect();
        for (i, row) in out.iter_mut().enumerate() {
            row[i] += x;
        }
        out
    }

    /// `det(xI - M)`, i.e. the characteristic polynomial evaluated at `x`,
    /// computed by fraction-free elimination on the dense shifted matrix.
    pub fn charpoly_at(&self, x: &BigInt) -> BigInt {
        bareiss_determinant(self.shifted(x))
    }

    /// `det(M)` itself.
    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.entries.clone())
    }
}

/// Exact determinant of a square integer matrix by the Bareiss
/// fraction-free algorithm. Every division is exact, so the result is the
/// true integer determinant with no rounding anywhere.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev_pivot = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Pivot by row swap; a fully zero column means det = 0.
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev_pivot;
            }
            m[i][k] = BigInt::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Sign of an integer as -1, 0, or 1 (small helper shared by tests).
pub fn signum(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().copied().map(BigInt::from).collect())
            .collect()
    }

    #[test]
    fn kac_matrix_entries_n2() {
        let w = WeightSequence::kac(2).unwrap();
        let m = TridiagonalMatrix::from_weights(&w);
        let expected = mat(&[&[0, 2, 0], &[1, 0, 1], &[0, 2, 0]]);
        assert_eq!(m.rows().map(<[BigInt]>::to_vec).collect::<Vec<_>>(), expected);
        assert_eq!(m.trace(), big(0));
    }

    #[test]
    fn bareiss_known_determinants() {
        assert_eq!(bareiss_determinant(mat(&[&[7]])), big(7));
        assert_eq!(bareiss_determinant(mat(&[&[1, 2], &[3, 4]])), big(-2));
        // Needs a row swap on the zero leading pivot.
        assert_eq!(bareiss_determinant(mat(&[&[0, 1], &[1, 0]])), big(-1));
        // Singular.
        assert_eq!(
            bareiss_determinant(mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])),
            big(0)
        );
        // 3x3 with known value: det = 1*(1*6-5*2) - 2*(4*6-5*0) + 3*(4*2-1*0)
        assert_eq!(
            bareiss_determinant(mat(&[&[1, 2, 3], &[4, 1, 5], &[0, 2, 6]])),
            big(-4 - 48 + 24)
        );
    }

    #[test]
    fn charpoly_at_matches_known_values() {
        // chi_2(x) = x^3 - 4x for the Kac weights at n = 2.
        let m = TridiagonalMatrix::from_weights(&WeightSequence::kac(2).unwrap());
        assert_eq!(m.charpoly_at(&big(0)), big(0));
        assert_eq!(m.charpoly_at(&big(2)), big(0)); // eigenvalue
        assert_eq!(m.charpoly_at(&big(3)), big(27 - 12));
        assert_eq!(m.charpoly_at(&big(-1)), big(-1 + 4));
        assert_eq!(m.determinant(), big(0));
    }

    #[test]
    fn rational_matvec() {
        let m = TridiagonalMatrix::from_weights(&WeightSequence::kac(2).unwrap());
        let v: Vec<BigRational> = [1, 0, -1]
            .into_iter()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let product = m.mul_rational_vec(&v);
        assert!(product.iter().all(Zero::is_zero));
    }
}
