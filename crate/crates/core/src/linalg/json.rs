//! JSON form of a matrix:
//! `{"rows": r, "cols": c, "entries": [[...], ...], "modulus": p}`.
//!
//! Rational entries are integers or `"a/b"` strings; `modulus` is present
//! only for prime-field matrices.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{ExactMatrix, ScalarDomain};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
}

fn parse_scalar(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("matrix entry {n} is not an integer; use an \"a/b\" string")))?;
            Ok(BigRational::from_integer(i.into()))
        }
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((a, b)) => {
                    let num =
                        BigInt::from_str(a.trim()).map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
                    let den =
                        BigInt::from_str(b.trim()).map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
                    if den == BigInt::from(0) {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    Ok(BigRational::new(num, den))
                }
                None => BigInt::from_str(s)
                    .map(BigRational::from_integer)
                    .map_err(|_| Error::Parse(format!("bad matrix entry {s:?}"))),
            }
        }
        other => Err(Error::Parse(format!("bad matrix entry {other}"))),
    }
}

fn format_scalar(v: &BigRational) -> Value {
    if v.is_integer() {
        if let Ok(i) = i64::try_from(v.numer()) {
            return Value::from(i);
        }
    }
    Value::String(v.to_string())
}

impl From<&ExactMatrix> for MatrixJson {
    fn from(m: &ExactMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|i| (0..m.cols()).map(|j| format_scalar(&m.get(i, j))).collect()).collect(),
            modulus: match m.domain() {
                ScalarDomain::Rational => None,
                ScalarDomain::PrimeField(p) => Some(p),
            },
        }
    }
}

impl TryFrom<MatrixJson> for ExactMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(Error::DimensionMismatch(format!("declared {}x{} but entries do not match", j.rows, j.cols)));
        }
        let rows = j
            .entries
            .iter()
            .map(|r| r.iter().map(parse_scalar).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = ExactMatrix::from_rational_rows(rows)?;
        // from_rational_rows cannot see the declared shape of an empty matrix
        let m = if j.rows * j.cols == 0 { ExactMatrix::zeros(j.rows, j.cols, ScalarDomain::Rational)? } else { m };
        match j.modulus {
            None => Ok(m),
            Some(p) => m.to_prime_field(p),
        }
    }
}

impl ExactMatrix {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: MatrixJson = serde_json::from_str(s)?;
        j.try_into()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&MatrixJson::from(self)).expect("matrix JSON is always serializable")
    }
}
