//! Exact-arithmetic engine for the Borwein identity and the Sylvester-Kac
//! matrix.
//!
//! For a positive integer `n`, the identity states
//!
//! ```text
//!   sum over k-subsets J of {1..n} with every j = n (mod 2)   of   prod j^2
//! = sum over k-subsets J of {1..n} with no two consecutive j  of   prod j(n+1-j)
//! ```
//!
//! Both sides turn out to be `|d_{k,n}|`, the magnitude of the coefficient of
//! `x^(n+1-2k)` in the characteristic polynomial of the Sylvester-Kac matrix
//! `S_n`. This crate computes every quantity involved by several independent
//! routes, all in exact integer or rational arithmetic:
//!
//! - [`charpoly`]: the characteristic polynomial of a general zero-diagonal
//!   tridiagonal matrix, by a three-term coefficient recurrence and by a
//!   generic determinant oracle over polynomial entries.
//! - [`symmfunc`]: both constrained subset sums, each by explicit enumeration
//!   and by an `O(n*k)` dynamic program.
//! - [`spectrum`]: the exact integer eigenvalues `n - 2d` of `S_n` with exact
//!   rational eigenvectors built from a seed recurrence and Newton
//!   interpolation, plus the expanded product form of the characteristic
//!   polynomial.
//! - [`pyramid`]: a brute-force count over an explicit cube-pyramid model
//!   whose layer and slice statistics realize the two sides of the identity.
//!
//! All routes agree coefficient-for-coefficient; the test suite and the `kac`
//! CLI exist to demonstrate exactly that.

pub mod charpoly;
pub mod matrix;
pub mod poly;
pub mod pyramid;
pub mod spectrum;
pub mod symmfunc;
pub mod weights;

pub use charpoly::{charpoly_direct, charpoly_recurrence, CharPoly, OracleError, ORACLE_CAP};
pub use matrix::TridiagonalMatrix;
pub use poly::Poly;
pub use pyramid::{
    count_layer_distinct, count_slice_separated, Cube, PyramidError, PyramidModel,
    PYRAMID_BUDGET, PYRAMID_CAP,
};
pub use spectrum::{
    eigenvalues, eigenvector, expanded_charpoly, kac_matrix, verify_functional_equation,
    EigenPair, InterpolatingPolynomial, SpectrumError,
};
pub use symmfunc::{
    binomial, lhs_sum, rhs_sum_dp, rhs_sum_enum, verify_identity, EnumError, IdentityError,
    IdentityReport, SubsetFamily, SubsetKind, ENUM_CAP,
};
pub use weights::{WeightError, WeightSequence};
