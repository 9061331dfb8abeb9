//! Exact eigendecomposition of the Kac matrix `S_n`.
//!
//! `S_n` is the tridiagonal matrix with weights `a_i = i`, `b_i = n + 1 - i`.
//! Its spectrum is `{ n - 2d : d = 0..n }`, and each eigenvector comes from
//! a polynomial: a vector `v` satisfies `S_n v = lambda v` exactly when
//! `i v_i + (n - i) v_{i+2} = lambda v_{i+1}` for `i = 0..n`. Seeding
//! `v_1 = 1` and solving forward,
//!
//! ```text
//! v_{i+2} = ((n - 2d) v_{i+1} - i v_i) / (n - i),   i = 0..d-1,
//! ```
//!
//! gives `v_1..v_{d+1}`; the unique polynomial `p` of degree at most `d`
//! with `p(i) = v_i` on those nodes then satisfies the functional equation
//! `x p(x) + (n - x) p(x+2) = lambda p(x+1)` identically, so
//! `[p(1), ..., p(n+1)]` is an eigenvector with eigenvalue `n - 2d`.
//! Everything here is exact rational arithmetic; eigenvector membership is
//! established by an actual matrix-vector multiply, not by the relation
//! that produced the seed.

use crate::charpoly::CharPoly;
use crate::matrix::TridiagonalMatrix;
use crate::poly::Poly;
use crate::weights::WeightSequence;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("eigenvector index d = {d} out of range 0..={n}")]
    IndexOutOfRange { n: usize, d: usize },
}

/// Polynomial through `(i, values[i-1])` for nodes `i = 1..=values.len()`,
/// stored as Newton forward-difference coefficients. With consecutive
/// integer nodes the divided differences are `O(d^2)` exact rational
/// operations and no linear system is ever solved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolatingPolynomial {
    coeffs: Vec<BigRational>,
}

impl InterpolatingPolynomial {
    pub fn from_values(values: &[BigRational]) -> Self {
        assert!(!values.is_empty(), "need at least one node");
        let m = values.len();
        let mut coeffs = values.to_vec();
        for level in 1..m {
            // Nodes are consecutive integers, so x_i - x_{i-level} = level.
            let span = BigRational::from_integer(BigInt::from(level));
            for i in (level..m).rev() {
                let diff = &coeffs[i] - &coeffs[i - 1];
                coeffs[i] = diff / &span;
            }
        }
        Self { coeffs }
    }

    /// The bound `d` from construction; actual degree may be lower.
    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest Newton coefficient that is nonzero, or `None` if `p = 0`.
    pub fn actual_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Coefficient of the degree-`d` Newton basis term; this is the leading
    /// coefficient of `p` when the degree bound is attained.
    pub fn leading_coefficient(&self) -> &BigRational {
        self.coeffs.last().expect("nonempty")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let m = self.coeffs.len();
        let mut acc = self.coeffs[m - 1].clone();
        for i in (0..m - 1).rev() {
            let node = BigRational::from_integer(BigInt::from(i + 1));
            acc = acc * (x - node) + &self.coeffs[i];
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }
}

/// One exact eigenpair of `S_n`: eigenvalue `n - 2d`, the seed values
/// `v_1..v_{d+1}`, their interpolating polynomial, and the full eigenvector
/// `[p(1), ..., p(n+1)]` normalized by `v_1 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPair {
    n: usize,
    d: usize,
    lambda: i64,
    seed: Vec<BigRational>,
    poly: InterpolatingPolynomial,
    vector: Vec<BigRational>,
}

impl EigenPair {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn seed(&self) -> &[BigRational] {
        &self.seed
    }

    pub fn poly(&self) -> &InterpolatingPolynomial {
        &self.poly
    }

    pub fn vector(&self) -> &[BigRational] {
        &self.vector
    }

    /// Clears denominators and common factors, making the first nonzero
    /// entry positive: a canonical integer form for golden files.
    pub fn integer_vector(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for v in &self.vector {
            lcm = lcm.lcm(v.denom());
        }
        let scale = BigRational::from_integer(lcm);
        let mut ints: Vec<BigInt> = self
            .vector
            .iter()
            .map(|v| (v * &scale).to_integer())
            .collect();
        let mut gcd = BigInt::zero();
        for x in &ints {
            gcd = gcd.gcd(x);
        }
        if !gcd.is_zero() && !gcd.is_one() {
            for x in &mut ints {
                *x /= &gcd;
            }
        }
        if ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
            for x in &mut ints {
                *x = -&*x;
            }
        }
        ints
    }

    /// Exact check that `S_n v = lambda v`, by a dense matrix-vector
    /// multiply (independent of the seed recurrence).
    pub fn check_eigen_relation(&self) -> bool {
        let matrix = kac_matrix(self.n);
        let product = matrix.mul_rational_vec(&self.vector);
        let lambda = BigRational::from_integer(BigInt::from(self.lambda));
        product
            .iter()
            .zip(&self.vector)
            .all(|(lhs, v)| *lhs == &lambda * v)
    }

    /// Whether the vector satisfies `v_i = v_{n+2-i}` (`Some(1)`),
    /// `v_i = -v_{n+2-i}` (`Some(-1)`), or neither (`None`). Observational
    /// only; nothing in the construction promises it.
    pub fn reflection_symmetry(&self) -> Option<i8> {
        let v = &self.vector;
        let len = v.len();
        if v.iter().enumerate().all(|(i, x)| *x == v[len - 1 - i]) {
            Some(1)
        } else if v.iter().enumerate().all(|(i, x)| *x == -&v[len - 1 - i]) {
            Some(-1)
        } else {
            None
        }
    }
}

/// The Kac matrix `S_n` with subdiagonal `1..n` and superdiagonal `n..1`.
pub fn kac_matrix(n: usize) -> TridiagonalMatrix {
    let w = WeightSequence::kac(n).expect("n >= 1");
    TridiagonalMatrix::from_weights(&w)
}

/// The full spectrum `[n, n-2, ..., -n]`, descending.
pub fn eigenvalues(n: usize) -> Vec<i64> {
    assert!(n >= 1, "n >= 1");
    (0..=n as i64).map(|d| n as i64 - 2 * d).collect()
}

/// Builds the exact eigenpair for eigenvalue `n - 2d`.
pub fn eigenvector(n: usize, d: usize) -> Result<EigenPair, SpectrumError> {
    assert!(n >= 1, "n >= 1");
    if d > n {
        return Err(SpectrumError::IndexOutOfRange { n, d });
    }
    let lambda = n as i64 - 2 * d as i64;
    let lambda_q = BigRational::from_integer(BigInt::from(lambda));

    // v_1 = 1; v_{i+2} = (lambda v_{i+1} - i v_i) / (n - i). The divisor
    // n - i is a positive integer because i <= d - 1 <= n - 1.
    let mut seed: Vec<BigRational> = vec![BigRational::one()];
    for i in 0..d {
        let mut numer = &lambda_q * &seed[i];
        if i >= 1 {
            numer -= BigRational::from_integer(BigInt::from(i)) * &seed[i - 1];
        }
        let denom = BigRational::from_integer(BigInt::from(n - i));
        seed.push(numer / denom);
    }

    let poly = InterpolatingPolynomial::from_values(&seed);
    let vector: Vec<BigRational> = (1..=n as i64 + 1).map(|i| poly.eval_int(i)).collect();

    // Interpolation must reproduce the seed exactly on the nodes.
    for (i, v) in seed.iter().enumerate() {
        assert_eq!(&vector[i], v, "interpolant must hit node {}", i + 1);
    }

    Ok(EigenPair {
        n,
        d,
        lambda,
        seed,
        poly,
        vector,
    })
}

/// Checks `x p(x) + (n - x) p(x+2) = lambda p(x+1)` at the integer points
/// `x = 0..sample_count`. Both sides have degree at most `d`, so any
/// `sample_count >= d + 1` certifies the identity everywhere.
pub fn verify_functional_equation(pair: &EigenPair, sample_count: usize) -> bool {
    let n = BigRational::from_integer(BigInt::from(pair.n as i64));
    let lambda = BigRational::from_integer(BigInt::from(pair.lambda));
    (0..sample_count as i64).all(|x| {
        let xq = BigRational::from_integer(BigInt::from(x));
        let lhs = &xq * pair.poly.eval_int(x) + (&n - &xq) * pair.poly.eval_int(x + 2);
        let rhs = &lambda * pair.poly.eval_int(x + 1);
        lhs == rhs
    })
}

/// Expands the product form of the characteristic polynomial of `S_n`,
///
/// ```text
/// chi_n(x) = x^eps * prod_{1 <= j <= n, j = n (mod 2)} (x^2 - j^2),
/// ```
///
/// with `eps = 1` for even `n` and `0` for odd `n`. This route never sees
/// the matrix; it multiplies out the known roots.
pub fn expanded_charpoly(n: usize) -> CharPoly {
    assert!(n >= 1, "n >= 1");
    let mut acc = if n % 2 == 0 {
        Poly::x()
    } else {
        Poly::constant(BigInt::one())
    };
    let start = if n % 2 == 1 { 1 } else { 2 };
    for j in (start..=n).step_by(2) {
        let j2 = BigInt::from(j) * BigInt::from(j);
        let factor = Poly::from_coeffs(vec![-j2, BigInt::zero(), BigInt::one()]);
        acc = &acc * &factor;
    }
    CharPoly::from_dense(n, &acc)
}
