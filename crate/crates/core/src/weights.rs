//! Off-diagonal weight sequences for the tridiagonal matrix family.
//!
//! A [`WeightSequence`] holds the subdiagonal weights `a_1..a_n` and the
//! superdiagonal weights `b_1..b_n` of the `(n+1) x (n+1)` matrix `M_n`.
//! The Kac specialization `a_i = i`, `b_i = n + 1 - i` is the one whose
//! spectrum the [`crate::spectrum`] module constructs in closed form.
//!
//! Weights are exact integers. Everything downstream is equality-checked, so
//! there is no floating point anywhere in this crate.

use num_bigint::BigInt;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    /// The matrix family is only defined for n >= 1.
    #[error("matrix order n must be at least 1")]
    ZeroOrder,
    #[error("weight sequences must have equal length (got {a} and {b})")]
    LengthMismatch { a: usize, b: usize },
    #[error("invalid weights document: {0}")]
    Document(String),
}

/// The off-diagonal weights `(a_j)`, `(b_j)` of a zero-diagonal tridiagonal
/// matrix `M_n`. Immutable after construction.
///
/// External indices are 1-based (`a(1)..a(n)`), matching the usual notation
/// for the matrix entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequence {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl WeightSequence {
    /// The Kac weights `a_i = i`, `b_i = n + 1 - i`.
    pub fn kac(n: usize) -> Result<Self, WeightError> {
        if n == 0 {
            return Err(WeightError::ZeroOrder);
        }
        let a = (1..=n).map(BigInt::from).collect();
        let b = (1..=n).rev().map(BigInt::from).collect();
        Ok(Self { a, b })
    }

    /// Arbitrary integer weights. Zero and negative entries are allowed;
    /// only the lengths are constrained.
    pub fn custom(a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self, WeightError> {
        if a.len() != b.len() {
            return Err(WeightError::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        if a.is_empty() {
            return Err(WeightError::ZeroOrder);
        }
        Ok(Self { a, b })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(a: &[i64], b: &[i64]) -> Result<Self, WeightError> {
        Self::custom(
            a.iter().copied().map(BigInt::from).collect(),
            b.iter().copied().map(BigInt::from).collect(),
        )
    }

    /// Number of off-diagonal weights; the matrix `M_n` is `(n+1) x (n+1)`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Subdiagonal weight `a_j`, 1-based. Panics if `j` is outside `1..=n`.
    pub fn a(&self, j: usize) -> &BigInt {
        &self.a[j - 1]
    }

    /// Superdiagonal weight `b_j`, 1-based. Panics if `j` is outside `1..=n`.
    pub fn b(&self, j: usize) -> &BigInt {
        &self.b[j - 1]
    }

    /// The product `a_j * b_j`, 1-based.
    pub fn product(&self, j: usize) -> BigInt {
        &self.a[j - 1] * &self.b[j - 1]
    }

    /// All products `a_j * b_j` for `j = 1..=n`.
    pub fn products(&self) -> Vec<BigInt> {
        self.a.iter().zip(&self.b).map(|(x, y)| x * y).collect()
    }

    pub fn a_weights(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b_weights(&self) -> &[BigInt] {
        &self.b
    }

    /// Parses a `{"a": [...], "b": [...]}` document.
    ///
    /// Array elements may be JSON integers or decimal strings; strings are
    /// the only way to pass values outside the 64-bit range losslessly.
    pub fn from_json_str(doc: &str) -> Result<Self, WeightError> {
        let value: Value =
            serde_json::from_str(doc).map_err(|e| WeightError::Document(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| WeightError::Document("top level must be an object".into()))?;
        let a = int_array(obj.get("a"), "a")?;
        let b = int_array(obj.get("b"), "b")?;
        Self::custom(a, b)
    }

    /// Serializes to the same `{"a": [...], "b": [...]}` document shape,
    /// always using decimal strings so any magnitude round-trips.
    pub fn to_json(&self) -> Value {
        let strings = |v: &[BigInt]| -> Value {
            Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
        };
        serde_json::json!({ "a": strings(&self.a), "b": strings(&self.b) })
    }
}

fn int_array(field: Option<&Value>, name: &str) -> Result<Vec<BigInt>, WeightError> {
    let arr = field
        .ok_or_else(|| WeightError::Document(format!("missing field \"{name}\"")))?
        .as_array()
        .ok_or_else(|| WeightError::Document(format!("field \"{name}\" must be an array")))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| {
            parse_int(v).ok_or_else(|| {
                WeightError::Document(format!(
                    "\"{name}\"[{i}] must be an integer or a decimal string, got {v}"
                ))
            })
        })
        .collect()
}

fn parse_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(num) => {
            // Reject floats; a weight of 2.5 has no exact-integer meaning.
            if let Some(i) = num.as_i64() {
                Some(BigInt::from(i))
            } else {
                num.as_u64().map(BigInt::from)
            }
        }
        Value::String(s) => s.trim().parse::<BigInt>().ok(),
        _ => None,
    }
}
