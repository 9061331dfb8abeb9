//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run `cargo test --test acceptance -- --nocapture` to see every line even
//! when all criteria pass. Each check is exact; there are no tolerances
//! anywhere.

use kac_core::charpoly::{charpoly_direct, charpoly_recurrence};
use kac_core::pyramid::{count_layer_distinct, count_slice_separated, PyramidModel};
use kac_core::spectrum::{
    eigenvector, expanded_charpoly, verify_functional_equation, EigenPair,
};
use kac_core::symmfunc::{binomial, lhs_sum, max_k, rhs_sum_dp, SubsetFamily, SubsetKind};
use kac_core::weights::WeightSequence;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::sync::OnceLock;

fn report(label: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("acceptance {label}: PASS"),
        Err(msg) => {
            println!("acceptance {label}: FAIL ({msg})");
            panic!("acceptance {label} failed: {msg}");
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Criterion 1: the identity itself, swept over n = 1..=60 and every
/// admissible k, across all three polynomial-time routes.
#[test]
fn criterion_1_identity_sweep() {
    report("1 (identity sweep, n <= 60)", (|| {
        for n in 1..=60usize {
            let kac = WeightSequence::kac(n).map_err(|e| e.to_string())?;
            let chi = charpoly_recurrence(&kac);
            for k in 0..=max_k(n) as i64 {
                let lhs = lhs_sum(n, k);
                let rhs = rhs_sum_dp(n, k);
                let from_chi = chi.coefficient(k).abs();
                if lhs != rhs || rhs != from_chi {
                    return Err(format!(
                        "mismatch at n={n} k={k}: lhs={lhs} rhs_dp={rhs} |d_kn|={from_chi}"
                    ));
                }
            }
        }
        Ok(())
    })());
}

/// Criterion 2: the compressed recurrence equals the structure-blind
/// determinant oracle on Kac weights and on 100 seeded random sequences
/// with entries in [-9, 9].
#[test]
fn criterion_2_determinant_oracle() {
    report("2 (determinant-oracle equivalence, n <= 10)", (|| {
        for n in 1..=10usize {
            let w = WeightSequence::kac(n).map_err(|e| e.to_string())?;
            let direct = charpoly_direct(&w).map_err(|e| e.to_string())?;
            if charpoly_recurrence(&w) != direct {
                return Err(format!("Kac weights disagree at n={n}"));
            }
        }
        // xorshift64 with a fixed seed; entries mapped into [-9, 9].
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for case in 0..100usize {
            let n = case % 10 + 1;
            let a: Vec<i64> = (0..n).map(|_| (next() % 19) as i64 - 9).collect();
            let b: Vec<i64> = (0..n).map(|_| (next() % 19) as i64 - 9).collect();
            let w = WeightSequence::from_i64(&a, &b).map_err(|e| e.to_string())?;
            let direct = charpoly_direct(&w).map_err(|e| e.to_string())?;
            if charpoly_recurrence(&w) != direct {
                return Err(format!("random case {case} disagrees: a={a:?} b={b:?}"));
            }
        }
        Ok(())
    })());
}

fn all_pairs() -> &'static Vec<EigenPair> {
    static PAIRS: OnceLock<Vec<EigenPair>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let mut pairs = Vec::new();
        for n in 1..=40usize {
            for d in 0..=n {
                pairs.push(eigenvector(n, d).expect("d in range"));
            }
        }
        pairs
    })
}

/// Criterion 3: every constructed eigenpair satisfies S_n v = (n - 2d) v
/// exactly, and the expanded product form of chi_n equals the recurrence.
#[test]
fn criterion_3_spectrum_correctness() {
    report("3 (spectrum correctness, n <= 40)", (|| {
        for pair in all_pairs() {
            if !pair.check_eigen_relation() {
                return Err(format!("eigen relation fails at n={} d={}", pair.n(), pair.d()));
            }
        }
        for n in 1..=40usize {
            let kac = WeightSequence::kac(n).map_err(|e| e.to_string())?;
            if expanded_charpoly(n) != charpoly_recurrence(&kac) {
                return Err(format!("product form disagrees with recurrence at n={n}"));
            }
        }
        Ok(())
    })());
}

/// Criterion 4: the functional equation x p(x) + (n - x) p(x+2) =
/// lambda p(x+1) holds at the integer samples 0..=d+1 for every pair.
#[test]
fn criterion_4_functional_equation() {
    report("4 (functional equation, n <= 40)", (|| {
        for pair in all_pairs() {
            if !verify_functional_equation(pair, pair.d() + 2) {
                return Err(format!(
                    "functional equation fails at n={} d={}",
                    pair.n(),
                    pair.d()
                ));
            }
        }
        Ok(())
    })());
}

/// Criterion 5: brute-force cube counts match both sides of the identity,
/// and the layer/slice population laws hold exactly.
#[test]
fn criterion_5_pyramid_oracle() {
    report("5 (pyramid oracle, n <= 5)", (|| {
        for n in 1..=5usize {
            let model = PyramidModel::build(n).map_err(|e| e.to_string())?;
            for (j, size) in model.layer_sizes() {
                if size != (j * j) as usize {
                    return Err(format!("layer law fails at n={n} j={j}: {size}"));
                }
            }
            for (s, size) in model.slice_sizes() {
                if size != s as usize * (n + 1 - s as usize) {
                    return Err(format!("slice law fails at n={n} s={s}: {size}"));
                }
            }
            if model.layer_sizes().values().sum::<usize>() != model.total()
                || model.slice_sizes().values().sum::<usize>() != model.total()
            {
                return Err(format!("population totals disagree at n={n}"));
            }
            for k in 0..=max_k(n) + 2 {
                let by_layer = count_layer_distinct(&model, k).map_err(|e| e.to_string())?;
                let by_slice = count_slice_separated(&model, k).map_err(|e| e.to_string())?;
                if by_layer != lhs_sum(n, k as i64) {
                    return Err(format!("layer count disagrees at n={n} k={k}"));
                }
                if by_slice != rhs_sum_dp(n, k as i64) {
                    return Err(format!("slice count disagrees at n={n} k={k}"));
                }
            }
        }
        Ok(())
    })());
}

/// Criterion 6: family sizes match their binomial formulas, validated
/// against actual enumeration.
#[test]
fn criterion_6_enumeration_laws() {
    report("6 (enumeration laws, n <= 15)", (|| {
        for n in 1..=15usize {
            for k in 0..=max_k(n) + 1 {
                let no_consec = SubsetFamily::new(n, k, SubsetKind::NoTwoConsecutive)
                    .enumerate()
                    .map_err(|e| e.to_string())?
                    .count();
                if BigInt::from(no_consec) != binomial((n + 1 - k) as u64, k as u64) {
                    return Err(format!("no-two-consecutive law fails at n={n} k={k}"));
                }
                let parity = SubsetFamily::new(n, k, SubsetKind::ParityRestricted)
                    .enumerate()
                    .map_err(|e| e.to_string())?
                    .count();
                if BigInt::from(parity) != binomial(n.div_ceil(2) as u64, k as u64) {
                    return Err(format!("parity law fails at n={n} k={k}"));
                }
            }
        }
        Ok(())
    })());
}

/// Criterion 7: fixed golden values, each reproduced by the brute-force
/// oracles before being compared against the frozen constants.
#[test]
fn criterion_7_fixed_goldens() {
    report("7 (fixed-value goldens)", (|| {
        // (n=4, k=2) -> 64 and (n=3, k=2) -> 9, brute force first.
        let p4 = PyramidModel::build(4).map_err(|e| e.to_string())?;
        let p3 = PyramidModel::build(3).map_err(|e| e.to_string())?;
        let checks = [
            (count_layer_distinct(&p4, 2), 64),
            (count_slice_separated(&p4, 2), 64),
            (count_layer_distinct(&p3, 2), 9),
            (count_slice_separated(&p3, 2), 9),
        ];
        for (i, (value, expected)) in checks.into_iter().enumerate() {
            let value = value.map_err(|e| e.to_string())?;
            if value != big(expected) {
                return Err(format!("brute-force golden {i} gave {value}, want {expected}"));
            }
        }
        if lhs_sum(4, 2) != big(64) || rhs_sum_dp(4, 2) != big(64) {
            return Err("(n=4, k=2) != 64".into());
        }
        if lhs_sum(3, 2) != big(9) || rhs_sum_dp(3, 2) != big(9) {
            return Err("(n=3, k=2) != 9".into());
        }

        // Kac n=3 coefficients, by the oracle and by the recurrence.
        let kac3 = WeightSequence::kac(3).map_err(|e| e.to_string())?;
        let expected: Vec<BigInt> = [1, -10, 9].iter().map(|&x| big(x)).collect();
        let direct = charpoly_direct(&kac3).map_err(|e| e.to_string())?;
        if direct.coeffs() != expected.as_slice() {
            return Err(format!("oracle coefficients {:?}", direct.coeffs()));
        }
        if charpoly_recurrence(&kac3).coeffs() != expected.as_slice() {
            return Err("recurrence coefficients for Kac n=3".into());
        }

        // Kac n=2 spectrum with the v_1 = 1 normalization.
        let golden = [(0usize, 2i64, [1i64, 1, 1]), (1, 0, [1, 0, -1]), (2, -2, [1, -1, 1])];
        for (d, lambda, vec) in golden {
            let pair = eigenvector(2, d).map_err(|e| e.to_string())?;
            if pair.lambda() != lambda {
                return Err(format!("lambda at d={d}"));
            }
            let expected: Vec<BigRational> = vec
                .iter()
                .map(|&x| BigRational::from_integer(big(x)))
                .collect();
            if pair.vector() != expected.as_slice() {
                return Err(format!("eigenvector at d={d}: {:?}", pair.vector()));
            }
        }
        Ok(())
    })());
}
