//! Brute-force counting oracle over an explicit cube-pyramid model.
//!
//! The pyramid for order `n` is a stack of square horizontal layers with a
//! one-cube ledge around each: side lengths shrink by 2 per level, so the
//! layers are exactly the `j x j` squares with `j <= n` and `j = n (mod 2)`
//! (a 1x1 apex for odd `n`, a 2x2 apex for even `n` -- forced by the layer
//! statistics, the abstract model leaves it implicit). Vertical slices are
//! taken parallel to a fixed edge: a cube in column `col` of layer `j` lies
//! in slice `s = col + (n - j)/2`, which centers every layer over the base.
//!
//! Counting k-cube selections with pairwise distinct layers reproduces the
//! sum of products of squares; counting selections whose slice indices are
//! pairwise at distance >= 2 reproduces the no-two-consecutive weighted sum.
//! Both counts here enumerate actual cube subsets, so they are independent
//! of every formula they are checked against.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::symmfunc::binomial;

/// Default order cap for brute-force counting.
pub const PYRAMID_CAP: usize = 6;

/// Default bound on `choose(total_cubes, k)` for a single count.
pub const PYRAMID_BUDGET: u64 = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PyramidError {
    #[error("pyramid model requires n >= 1")]
    ZeroOrder,
    #[error("brute-force count at n = {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("brute-force budget exceeded: choose({total}, {k}) > {budget}")]
    BudgetExceeded { total: usize, k: usize, budget: u64 },
}

/// One unit cube: its layer side length `j`, its 1-based position within
/// the layer, and its derived slice index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cube {
    pub layer: u32,
    pub row: u32,
    pub col: u32,
    pub slice: u32,
}

/// The full cube list for order `n`, in (layer, row, col) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidModel {
    n: usize,
    cubes: Vec<Cube>,
}

impl PyramidModel {
    pub fn build(n: usize) -> Result<Self, PyramidError> {
        if n == 0 {
            return Err(PyramidError::ZeroOrder);
        }
        let mut cubes = Vec::new();
        let mut j = if n % 2 == 0 { 2 } else { 1 };
        while j <= n {
            let offset = ((n - j) / 2) as u32;
            for row in 1..=j as u32 {
                for col in 1..=j as u32 {
                    cubes.push(Cube {
                        layer: j as u32,
                        row,
                        col,
                        slice: col + offset,
                    });
                }
            }
            j += 2;
        }
        Ok(Self { n, cubes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn total(&self) -> usize {
        self.cubes.len()
    }

    /// Cube count per layer side length; each layer `j` holds `j^2` cubes.
    pub fn layer_sizes(&self) -> BTreeMap<u32, usize> {
        let mut sizes = BTreeMap::new();
        for c in &self.cubes {
            *sizes.entry(c.layer).or_insert(0) += 1;
        }
        sizes
    }

    /// Cube count per slice index; slice `s` holds `s * (n + 1 - s)` cubes,
    /// which is exactly the Kac weight product at position `s`.
    pub fn slice_sizes(&self) -> BTreeMap<u32, usize> {
        let mut sizes = BTreeMap::new();
        for c in &self.cubes {
            *sizes.entry(c.slice).or_insert(0) += 1;
        }
        sizes
    }
}

/// Number of k-cube selections with pairwise distinct layers.
pub fn count_layer_distinct(p: &PyramidModel, k: usize) -> Result<BigInt, PyramidError> {
    count_layer_distinct_with(p, k, PYRAMID_CAP, PYRAMID_BUDGET)
}

pub fn count_layer_distinct_with(
    p: &PyramidModel,
    k: usize,
    cap: usize,
    budget: u64,
) -> Result<BigInt, PyramidError> {
    check_budget(p, k, cap, budget)?;
    // Strictly increasing layer keys; one cube per layer.
    Ok(count_separated(p, k, |c| c.layer, 1))
}

/// Number of k-cube selections whose slice indices are pairwise at
/// distance >= 2 (same slice and adjacent slices both forbidden).
pub fn count_slice_separated(p: &PyramidModel, k: usize) -> Result<BigInt, PyramidError> {
    count_slice_separated_with(p, k, PYRAMID_CAP, PYRAMID_BUDGET)
}

pub fn count_slice_separated_with(
    p: &PyramidModel,
    k: usize,
    cap: usize,
    budget: u64,
) -> Result<BigInt, PyramidError> {
    check_budget(p, k, cap, budget)?;
    Ok(count_separated(p, k, |c| c.slice, 2))
}

/// Same count with slices taken parallel to the other base edge (the row
/// coordinate). The model is symmetric under that quarter turn, so this
/// must agree with [`count_slice_separated`]; it exists as a cross-check.
pub fn count_slice_separated_rowwise(
    p: &PyramidModel,
    k: usize,
) -> Result<BigInt, PyramidError> {
    check_budget(p, k, PYRAMID_CAP, PYRAMID_BUDGET)?;
    let n = p.n() as u32;
    Ok(count_separated(p, k, move |c| c.row + (n - c.layer) / 2, 2))
}

fn check_budget(p: &PyramidModel, k: usize, cap: usize, budget: u64) -> Result<(), PyramidError> {
    if p.n() > cap {
        return Err(PyramidError::CapExceeded { n: p.n(), cap });
    }
    let candidates = binomial(p.total() as u64, k as u64);
    if candidates > BigInt::from(budget) {
        return Err(PyramidError::BudgetExceeded {
            total: p.total(),
            k,
            budget,
        });
    }
    Ok(())
}

/// Backtracking count of k-subsets of cubes whose keys are pairwise at
/// distance >= `min_gap`. Cubes are visited in ascending key order, so the
/// pairwise constraint reduces to a check against the last chosen key.
fn count_separated<F>(p: &PyramidModel, k: usize, key: F, min_gap: u32) -> BigInt
where
    F: Fn(&Cube) -> u32,
{
    if k == 0 {
        return BigInt::one();
    }
    let mut keys: Vec<u32> = p.cubes().iter().map(&key).collect();
    keys.sort_unstable();

    fn descend(
        keys: &[u32],
        start: usize,
        remaining: usize,
        min_key: u32,
        min_gap: u32,
        count: &mut BigInt,
    ) {
        if remaining == 0 {
            *count += 1u32;
            return;
        }
        // Jump past keys that violate the gap against the last chosen cube.
        let mut i = start + keys[start..].partition_point(|&x| x < min_key);
        while i < keys.len() {
            if keys.len() - i < remaining {
                break;
            }
            descend(keys, i + 1, remaining - 1, keys[i] + min_gap, min_gap, count);
            i += 1;
        }
    }

    let mut count = BigInt::zero();
    descend(&keys, 0, k, 0, min_gap, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn build_rejects_zero() {
        assert_eq!(PyramidModel::build(0), Err(PyramidError::ZeroOrder));
    }

    #[test]
    fn model_n2() {
        let p = PyramidModel::build(2).unwrap();
        assert_eq!(p.total(), 4);
        assert_eq!(p.layer_sizes(), BTreeMap::from([(2, 4)]));
        assert_eq!(p.slice_sizes(), BTreeMap::from([(1, 2), (2, 2)]));
    }

    #[test]
    fn model_n3() {
        let p = PyramidModel::build(3).unwrap();
        assert_eq!(p.total(), 10);
        assert_eq!(p.layer_sizes(), BTreeMap::from([(1, 1), (3, 9)]));
        assert_eq!(p.slice_sizes(), BTreeMap::from([(1, 3), (2, 4), (3, 3)]));
    }

    #[test]
    fn model_n4() {
        let p = PyramidModel::build(4).unwrap();
        assert_eq!(p.total(), 20);
        assert_eq!(p.layer_sizes(), BTreeMap::from([(2, 4), (4, 16)]));
        assert_eq!(
            p.slice_sizes(),
            BTreeMap::from([(1, 4), (2, 6), (3, 6), (4, 4)])
        );
    }

    #[test]
    fn apex_side_is_forced_by_parity() {
        for n in 1..=6 {
            let p = PyramidModel::build(n).unwrap();
            let smallest = *p.layer_sizes().keys().next().unwrap();
            assert_eq!(smallest, if n % 2 == 0 { 2 } else { 1 });
        }
    }

    #[test]
    fn layer_distinct_counts() {
        let p3 = PyramidModel::build(3).unwrap();
        // One cube from the 1-layer times one of nine from the 3-layer.
        assert_eq!(count_layer_distinct(&p3, 2).unwrap(), big(9));

        let p2 = PyramidModel::build(2).unwrap();
        assert_eq!(count_layer_distinct(&p2, 2).unwrap(), big(0));

        let p4 = PyramidModel::build(4).unwrap();
        assert_eq!(count_layer_distinct(&p4, 2).unwrap(), big(64));
    }

    #[test]
    fn slice_separated_counts() {
        let p3 = PyramidModel::build(3).unwrap();
        // Only the slice pair {1, 3} is non-adjacent: 3 * 3 cube choices.
        assert_eq!(count_slice_separated(&p3, 2).unwrap(), big(9));

        let p2 = PyramidModel::build(2).unwrap();
        assert_eq!(count_slice_separated(&p2, 2).unwrap(), big(0));

        // Slice pairs {1,3}, {1,4}, {2,4}: 4*6 + 4*4 + 6*4.
        let p4 = PyramidModel::build(4).unwrap();
        assert_eq!(count_slice_separated(&p4, 2).unwrap(), big(64));
    }

    #[test]
    fn k_zero_and_oversized_k() {
        let p = PyramidModel::build(3).unwrap();
        assert_eq!(count_layer_distinct(&p, 0).unwrap(), big(1));
        assert_eq!(count_slice_separated(&p, 0).unwrap(), big(1));
        assert_eq!(count_layer_distinct(&p, 5).unwrap(), big(0));
        assert_eq!(count_slice_separated(&p, 5).unwrap(), big(0));
    }

    #[test]
    fn caps_and_budget() {
        let p = PyramidModel::build(7).unwrap(); // building is fine
        assert_eq!(
            count_layer_distinct(&p, 1),
            Err(PyramidError::CapExceeded { n: 7, cap: 6 })
        );
        let p = PyramidModel::build(6).unwrap();
        assert_eq!(
            count_slice_separated_with(&p, 10, 6, 1000),
            Err(PyramidError::BudgetExceeded {
                total: 56,
                k: 10,
                budget: 1000
            })
        );
    }

    #[test]
    fn row_axis_gives_identical_counts() {
        for n in 1..=4 {
            let p = PyramidModel::build(n).unwrap();
            for k in 0..=3 {
                assert_eq!(
                    count_slice_separated(&p, k).unwrap(),
                    count_slice_separated_rowwise(&p, k).unwrap(),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn slice_indices_stay_in_range() {
        for n in 1..=6 {
            let p = PyramidModel::build(n).unwrap();
            for c in p.cubes() {
                assert!(c.slice >= 1 && c.slice <= n as u32);
            }
        }
    }
}
