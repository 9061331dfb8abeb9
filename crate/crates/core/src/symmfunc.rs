//! Both sides of the Borwein identity, by enumeration and by dynamic
//! programming.
//!
//! For `n >= 1` and `k >= 0` the identity equates
//!
//! - the sum over k-subsets `J` of `{1..n}` with every element congruent to
//!   `n` mod 2 of `prod_{j in J} j^2` ([`lhs_sum`]), and
//! - the sum over k-subsets `J` of `{1..n}` containing no two consecutive
//!   integers of `prod_{j in J} j(n+1-j)` ([`rhs_sum_dp`], [`rhs_sum_enum`]).
//!
//! The left side is the elementary symmetric function `e_k` of the
//! admissible squares, computed by the standard one-pass recurrence. The
//! right side reuses the characteristic-polynomial recurrence in unsigned
//! form, `S_{k,m} = S_{k,m-1} + a_m b_m * S_{k-1,m-2}`: a subset of
//! `{1..m}` either omits `m` or contains it and therefore omits `m-1`.
//! Formally both sides are coefficient extractions from the product
//! `prod_j (1 - x_j a_j b_j)` with consecutive-index terms struck; that
//! formal-variable view stays in the documentation -- the dynamic programs
//! above are its entire computational content.
//!
//! Out-of-range `k` (negative, or larger than any admissible subset)
//! returns 0 rather than erroring, so rectangular `(n, k)` sweeps need no
//! branching.

use crate::charpoly::charpoly_recurrence;
use crate::pyramid::{
    count_layer_distinct_with, count_slice_separated_with, PyramidError, PyramidModel,
};
use crate::weights::{WeightError, WeightSequence};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default cap on `n` for explicit subset enumeration.
pub const ENUM_CAP: usize = 25;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration over [{n}] exceeds the cap of {cap}; raise the cap explicitly")]
    CapExceeded { n: usize, cap: usize },
}

/// Which constrained family of k-subsets of `{1..n}` to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetKind {
    /// All elements congruent to `n` modulo 2.
    ParityRestricted,
    /// No two consecutive integers.
    NoTwoConsecutive,
}

/// A family of k-subsets of `{1..n}` of one of the two constrained kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetFamily {
    pub n: usize,
    pub k: usize,
    pub kind: SubsetKind,
}

impl SubsetFamily {
    pub fn new(n: usize, k: usize, kind: SubsetKind) -> Self {
        Self { n, k, kind }
    }

    /// Lazily enumerates the family in lexicographic order of the sorted
    /// element lists. Errors above the default cap.
    pub fn enumerate(&self) -> Result<SubsetIter, EnumError> {
        self.enumerate_with_cap(ENUM_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: usize) -> Result<SubsetIter, EnumError> {
        if self.n > cap {
            return Err(EnumError::CapExceeded { n: self.n, cap });
        }
        Ok(SubsetIter::new(*self))
    }
}

/// Streaming lexicographic enumeration of a [`SubsetFamily`].
#[derive(Debug)]
pub struct SubsetIter {
    family: SubsetFamily,
    stack: Vec<u32>,
    candidate: u32,
    done: bool,
}

impl SubsetIter {
    fn new(family: SubsetFamily) -> Self {
        let candidate = match family.kind {
            // Smallest element of the right parity.
            SubsetKind::ParityRestricted => {
                if family.n % 2 == 1 {
                    1
                } else {
                    2
                }
            }
            SubsetKind::NoTwoConsecutive => 1,
        };
        Self {
            family,
            stack: Vec::with_capacity(family.k),
            candidate,
            done: false,
        }
    }

    /// Gap to the next admissible element after choosing `c`.
    fn step_after_take(&self) -> u32 {
        2 // both kinds: same parity, or skip the consecutive integer
    }

    /// Gap to the next sibling candidate at the same position.
    fn step_sibling(&self) -> u32 {
        match self.family.kind {
            SubsetKind::ParityRestricted => 2,
            SubsetKind::NoTwoConsecutive => 1,
        }
    }
}

impl Iterator for SubsetIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if self.family.k == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            if self.candidate > self.family.n as u32 {
                match self.stack.pop() {
                    Some(top) => self.candidate = top + self.step_sibling(),
                    None => {
                        self.done = true;
                        return None;
                    }
                }
                continue;
            }
            self.stack.push(self.candidate);
            if self.stack.len() == self.family.k {
                let subset = self.stack.clone();
                let top = self.stack.pop().expect("nonempty");
                self.candidate = top + self.step_sibling();
                return Some(subset);
            }
            self.candidate += self.step_after_take();
        }
    }
}

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut res = BigInt::one();
    for i in 0..k.min(n - k) {
        res = res * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    res
}

/// Largest `k` with a (possibly) nonzero term for order `n`:
/// `floor((n+1)/2)`, which also equals `ceil(n/2)`.
pub fn max_k(n: usize) -> usize {
    n.div_ceil(2)
}

/// Left side: `e_k` of the multiset `{ j^2 : 1 <= j <= n, j = n (mod 2) }`.
pub fn lhs_sum(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as usize;
    let mut e = vec![BigInt::one()];
    let start = if n % 2 == 1 { 1 } else { 2 };
    for j in (start..=n).step_by(2) {
        let square = BigInt::from(j * j);
        if e.len() <= k {
            e.push(BigInt::zero());
        }
        for t in (1..e.len()).rev() {
            let inc = &square * &e[t - 1];
            e[t] += inc;
        }
    }
    e.into_iter().nth(k).unwrap_or_else(BigInt::zero)
}

/// Right side for Kac weights by the unsigned three-term recurrence,
/// `O(n*k)` big-integer operations.
pub fn rhs_sum_dp(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as usize;
    let mut two_back: Vec<BigInt> = vec![BigInt::one()];
    let mut one_back: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let ab = BigInt::from(m * (n + 1 - m));
        let width = max_k(m).min(k);
        let mut row = Vec::with_capacity(width + 1);
        for t in 0..=width {
            let mut c = one_back.get(t).cloned().unwrap_or_else(BigInt::zero);
            if t >= 1 {
                if let Some(prev) = two_back.get(t - 1) {
                    c += &ab * prev;
                }
            }
            row.push(c);
        }
        two_back = std::mem::replace(&mut one_back, row);
    }
    one_back.into_iter().nth(k).unwrap_or_else(BigInt::zero)
}

/// Right side for arbitrary weights by explicit enumeration of the
/// no-two-consecutive family.
pub fn rhs_sum_enum(k: i64, w: &WeightSequence) -> Result<BigInt, EnumError> {
    rhs_sum_enum_with_cap(k, w, ENUM_CAP)
}

pub fn rhs_sum_enum_with_cap(k: i64, w: &WeightSequence, cap: usize) -> Result<BigInt, EnumError> {
    if k < 0 {
        return Ok(BigInt::zero());
    }
    let family = SubsetFamily::new(w.n(), k as usize, SubsetKind::NoTwoConsecutive);
    let mut total = BigInt::zero();
    for subset in family.enumerate_with_cap(cap)? {
        let mut term = BigInt::one();
        for j in subset {
            term *= w.product(j as usize);
        }
        total += term;
    }
    Ok(total)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error(transparent)]
    Weights(#[from] WeightError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Pyramid(#[from] PyramidError),
}

/// Which optional routes [`verify_identity_with`] should run besides the
/// three polynomial-time ones, and under which caps.
#[derive(Debug, Clone, Copy)]
pub struct IdentityOptions {
    pub with_enum: bool,
    pub with_pyramid: bool,
    pub enum_cap: usize,
    pub pyramid_cap: usize,
    pub pyramid_budget: u64,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        Self {
            with_enum: false,
            with_pyramid: false,
            enum_cap: ENUM_CAP,
            pyramid_cap: crate::pyramid::PYRAMID_CAP,
            pyramid_budget: crate::pyramid::PYRAMID_BUDGET,
        }
    }
}

/// One `(n, k)` cell of the identity check: every computed route and
/// whether they all agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub k: i64,
    /// Parity-restricted sum of products of squares.
    pub lhs: BigInt,
    /// No-two-consecutive weighted sum via the dynamic program.
    pub rhs_dp: BigInt,
    /// `|d_{k,n}|` from the characteristic-polynomial recurrence.
    pub charpoly_abs: BigInt,
    /// No-two-consecutive weighted sum via explicit enumeration, if run.
    pub rhs_enum: Option<BigInt>,
    /// Brute-force layer-distinct cube count, if run.
    pub pyramid_layer: Option<BigInt>,
    /// Brute-force slice-separated cube count, if run.
    pub pyramid_slice: Option<BigInt>,
    pub all_equal: bool,
}

/// Checks the identity at one `(n, k)` cell; `with_pyramid` additionally
/// runs both brute-force cube counts.
pub fn verify_identity(n: usize, k: i64, with_pyramid: bool) -> Result<IdentityReport, IdentityError> {
    verify_identity_with(
        n,
        k,
        IdentityOptions {
            with_pyramid,
            ..IdentityOptions::default()
        },
    )
}

pub fn verify_identity_with(
    n: usize,
    k: i64,
    opts: IdentityOptions,
) -> Result<IdentityReport, IdentityError> {
    let kac = WeightSequence::kac(n)?;
    let lhs = lhs_sum(n, k);
    let rhs_dp = rhs_sum_dp(n, k);
    let charpoly_abs = charpoly_recurrence(&kac).coefficient(k).abs();

    let rhs_enum = if opts.with_enum {
        Some(rhs_sum_enum_with_cap(k, &kac, opts.enum_cap)?)
    } else {
        None
    };

    let (pyramid_layer, pyramid_slice) = if opts.with_pyramid {
        if k < 0 {
            (Some(BigInt::zero()), Some(BigInt::zero()))
        } else {
            let model = PyramidModel::build(n)?;
            let k = k as usize;
            (
                Some(count_layer_distinct_with(
                    &model,
                    k,
                    opts.pyramid_cap,
                    opts.pyramid_budget,
                )?),
                Some(count_slice_separated_with(
                    &model,
                    k,
                    opts.pyramid_cap,
                    opts.pyramid_budget,
                )?),
            )
        }
    } else {
        (None, None)
    };

    let mut all_equal = lhs == rhs_dp && rhs_dp == charpoly_abs;
    for extra in [&rhs_enum, &pyramid_layer, &pyramid_slice].into_iter().flatten() {
        all_equal = all_equal && *extra == lhs;
    }

    Ok(IdentityReport {
        n,
        k,
        lhs,
        rhs_dp,
        charpoly_abs,
        rhs_enum,
        pyramid_layer,
        pyramid_slice,
        all_equal,
    })
}
