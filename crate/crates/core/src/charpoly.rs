//! Exact characteristic polynomials of zero-diagonal tridiagonal matrices.
//!
//! For the `(n+1) x (n+1)` matrix `M_n` with subdiagonal `a_1..a_n` and
//! superdiagonal `b_1..b_n`, the characteristic polynomial
//! `chi_n(x) = det(xI - M_n)` satisfies the three-term recurrence
//!
//! ```text
//! chi_m(x) = x * chi_{m-1}(x) - a_m b_m * chi_{m-2}(x),
//! ```
//!
//! seeded with `chi_{-1} = 1` and `chi_0 = x`. Only the coefficients of
//! `x^(m+1-2k)` can be nonzero, so a polynomial of degree `m+1` compresses
//! into `floor((m+1)/2) + 1` integers `d_{k,m}`; the recurrence becomes
//! `r_{k,m} = r_{k,m-1} - a_m b_m * r_{k-1,m-2}` on those.
//!
//! [`charpoly_recurrence`] runs the compressed recurrence in `O(n*K)`
//! big-integer multiplications. [`charpoly_direct`] is a deliberately
//! structure-blind oracle: it expands `det(xI - M_n)` by cofactors over
//! generic dense polynomial entries and is capped at small `n`. The two
//! routes share no arithmetic and must agree coefficient-for-coefficient.

use crate::poly::Poly;
use crate::weights::WeightSequence;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Default order cap for the determinant oracle.
pub const ORACLE_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// The oracle exists for cross-validation at small orders; asking for a
    /// large one is a misuse, not a math error.
    #[error("determinant oracle invoked for n = {n}, above its cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Parity-compressed coefficients of `chi_n(x)`.
///
/// `coeffs()[k]` is `d_{k,n}`, the coefficient of `x^(n+1-2k)`, for
/// `k = 0..=k_max()` with `k_max = floor((n+1)/2)`. All other coefficients
/// of `chi_n` vanish identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `K = floor((n+1)/2)`, the largest index with a stored coefficient.
    pub fn k_max(&self) -> usize {
        self.n.div_ceil(2)
    }

    /// `d_{k,n}`; zero for `k` outside `0..=k_max()`.
    pub fn coefficient(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The compressed coefficients `d_{0,n}..d_{K,n}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Expands back to a dense polynomial of degree `n + 1`.
    pub fn to_dense(&self) -> Poly {
        let degree = self.n + 1;
        let mut dense = vec![BigInt::zero(); degree + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[degree - 2 * k] = c.clone();
        }
        Poly::from_coeffs(dense)
    }

    /// Evaluates `chi_n` at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.to_dense().eval(x)
    }

    /// Compresses a dense `chi_n` of degree `n + 1`. Panics if the dense
    /// polynomial violates the parity structure or is not monic; either
    /// would mean the caller's computation is wrong.
    pub fn from_dense(n: usize, dense: &Poly) -> Self {
        let degree = n + 1;
        assert_eq!(
            dense.degree(),
            Some(degree),
            "characteristic polynomial of an order-{} matrix must have degree {degree}",
            n + 1
        );
        let k_max = n.div_ceil(2);
        let mut coeffs = Vec::with_capacity(k_max + 1);
        for k in 0..=k_max {
            coeffs.push(dense.coeff(degree - 2 * k));
        }
        assert!(coeffs[0].is_one(), "chi_n must be monic");
        // Everything off the parity lattice must vanish.
        for i in 0..=degree {
            if (degree - i) % 2 == 1 {
                assert!(
                    dense.coeff(i).is_zero(),
                    "coefficient of x^{i} must vanish for a zero-diagonal tridiagonal matrix"
                );
            }
        }
        Self { n, coeffs }
    }
}

/// Compressed three-term recurrence for `det(xI - M_n)`.
pub fn charpoly_recurrence(w: &WeightSequence) -> CharPoly {
    let n = w.n();
    // Rows for chi_{-1} = 1 and chi_0 = x; both compress to [1].
    let mut two_back: Vec<BigInt> = vec![BigInt::one()];
    let mut one_back: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let ab = w.product(m);
        let k_max = m.div_ceil(2);
        let mut row = Vec::with_capacity(k_max + 1);
        for k in 0..=k_max {
            let mut c = one_back.get(k).cloned().unwrap_or_else(BigInt::zero);
            if k >= 1 {
                if let Some(prev) = two_back.get(k - 1) {
                    c -= &ab * prev;
                }
            }
            row.push(c);
        }
        two_back = std::mem::replace(&mut one_back, row);
    }
    CharPoly { n, coeffs: one_back }
}

/// Structure-blind determinant oracle with the default cap.
pub fn charpoly_direct(w: &WeightSequence) -> Result<CharPoly, OracleError> {
    charpoly_direct_with_cap(w, ORACLE_CAP)
}

/// Structure-blind determinant oracle with an explicit cap.
pub fn charpoly_direct_with_cap(w: &WeightSequence, cap: usize) -> Result<CharPoly, OracleError> {
    let n = w.n();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    // xI - M_n over dense polynomial entries.
    let order = n + 1;
    let mut entries = vec![vec![Poly::zero(); order]; order];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = Poly::x();
    }
    for j in 1..=n {
        entries[j][j - 1] = Poly::constant(-w.a(j));
        entries[j - 1][j] = Poly::constant(-w.b(j));
    }
    let cols: Vec<usize> = (0..order).collect();
    let dense = poly_det(&entries, &cols);
    Ok(CharPoly::from_dense(n, &dense))
}

/// Cofactor expansion about the last row of the submatrix formed by rows
/// `0..cols.len()` and the given columns. Knows nothing about bandedness;
/// it merely skips zero entries.
fn poly_det(entries: &[Vec<Poly>], cols: &[usize]) -> Poly {
    let m = cols.len();
    if m == 1 {
        return entries[0][cols[0]].clone();
    }
    let mut acc = Poly::zero();
    for (pos, &col) in cols.iter().enumerate() {
        let e = &entries[m - 1][col];
        if e.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != col)
            .collect();
        let minor = poly_det(entries, &remaining);
        let term = e * &minor;
        if (m - 1 + pos) % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}
