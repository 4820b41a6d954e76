//! `Z^k` as a model reduced ring with `k` minimal primes (the coordinate kernels).

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// An element of `Z^k`, `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductRingElem {
    coords: Vec<BigInt>,
}

impl TryFrom<Vec<BigInt>> for ProductRingElem {
    type Error = Error;

    fn try_from(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput("ring element needs at least one coordinate"));
        }
        Ok(ProductRingElem { coords })
    }
}

impl From<ProductRingElem> for Vec<BigInt> {
    fn from(e: ProductRingElem) -> Self {
        e.coords
    }
}

fn parse_coord(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("coordinate {n} is not an integer")))
        }
        Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coordinate {s:?}"))),
        other => Err(Error::Parse(format!("bad coordinate {other}"))),
    }
}

impl ProductRingElem {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        coords.try_into()
    }

    pub fn from_i64s(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Reads a JSON array of integers; big values may be given as decimal strings.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let values: Vec<Value> = serde_json::from_str(s)?;
        Self::new(values.iter().map(parse_coord).collect::<Result<_>>()?)
    }

    /// JSON array; coordinates outside the `i64` range are written as strings.
    pub fn to_json_string(&self) -> String {
        let values: Vec<Value> = self
            .coords
            .iter()
            .map(|c| i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string())))
            .collect();
        Value::Array(values).to_string()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Number of factors `k`.
    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Not a zero divisor: every coordinate is nonzero.
    pub fn is_regular(&self) -> bool {
        self.coords.iter().all(|c| !c.is_zero())
    }

    pub fn is_zero_divisor(&self) -> bool {
        !self.is_regular()
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.arity()).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::SizeMismatch(format!("elements of Z^{} and Z^{}", self.arity(), other.arity())));
        }
        Ok(ProductRingElem { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect() })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    /// `s` with `r·s = 0` and `r + s` regular: `1` where `r` vanishes, `0` elsewhere.
    pub fn regular_complement(&self) -> ProductRingElem {
        ProductRingElem {
            coords: self.coords.iter().map(|c| if c.is_zero() { BigInt::one() } else { BigInt::zero() }).collect(),
        }
    }
}

impl Add for &ProductRingElem {
    type Output = ProductRingElem;

    /// Panics on mismatched arity; see [`ProductRingElem::checked_add`].
    fn add(self, rhs: Self) -> ProductRingElem {
        self.checked_add(rhs).expect("same arity")
    }
}

impl Mul for &ProductRingElem {
    type Output = ProductRingElem;

    /// Panics on mismatched arity; see [`ProductRingElem::checked_mul`].
    fn mul(self, rhs: Self) -> ProductRingElem {
        self.checked_mul(rhs).expect("same arity")
    }
}

pub fn regular_complement(r: &ProductRingElem) -> ProductRingElem {
    r.regular_complement()
}
