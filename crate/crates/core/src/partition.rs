//! Integer partitions under the dominance order.
//!
//! `μ ≤ ν` in dominance order when every prefix sum of `μ` is at most the
//! corresponding prefix sum of `ν`. Partitions of a fixed `n` form a lattice
//! under this order, and conjugation reverses it. Through Jordan normal form
//! a partition of `n` names a conjugacy class of nilpotent `n x n` matrices,
//! and dominance is exactly the order `rk(N^i) ≤ rk(N'^i)` for all `i`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, ScalarDomain};

/// A non-increasing sequence of positive integers.
///
/// Stored in canonical (sorted) form, so equality is structural. Reads past
/// the last part return `0`.
///
/// The derived `Ord` is lexicographic on parts. It is a linear extension of
/// dominance, used only for canonical ordering of collections; use
/// [`Partition::is_dominated_by`] for the partial order itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `values` into a partition, rejecting non-positive entries.
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut parts = values
            .into_iter()
            .map(|v| {
                let v = v.into();
                if v <= 0 {
                    Err(Error::InvalidPart(v))
                } else {
                    Ok(v as usize)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The partition of `0`.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Single row `[n]`, the top of the dominance lattice.
    pub fn row(n: usize) -> Self {
        Partition { parts: if n == 0 { vec![] } else { vec![n] } }
    }

    /// Single column `[1, ..., 1]`, the bottom of the dominance lattice.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Caller guarantees `parts` is non-increasing; zeros are dropped.
    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or `0` beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `μᵀ_i = #{j : μ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|i| self.parts.iter().take_while(|&&p| p >= i).count()).collect();
        Partition { parts }
    }

    /// Prefix sums `μ_1, μ_1 + μ_2, ...` up to `len` terms (padded with the total).
    fn prefix_sums(&self, len: usize) -> Vec<usize> {
        (0..len)
            .scan(0, |acc, i| {
                *acc += self.part(i);
                Some(*acc)
            })
            .collect()
    }

    fn check_same_size(&self, other: &Partition) -> Result<usize> {
        let (a, b) = (self.size(), other.size());
        if a == b {
            Ok(a)
        } else {
            Err(Error::IncomparableSizes { left: a, right: b })
        }
    }

    /// `self ≤ other` in dominance order.
    pub fn is_dominated_by(&self, other: &Partition) -> Result<bool> {
        self.check_same_size(other)?;
        let len = self.len().max(other.len());
        Ok(self.prefix_sums(len).iter().zip(other.prefix_sums(len)).all(|(a, b)| *a <= b))
    }

    /// Greatest lower bound: first differences of the pointwise minimum of
    /// the prefix-sum sequences.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_same_size(other)?;
        let len = self.len().max(other.len());
        let mins: Vec<usize> =
            self.prefix_sums(len).into_iter().zip(other.prefix_sums(len)).map(|(a, b)| a.min(b)).collect();
        let parts =
            std::iter::once(0).chain(mins.iter().copied()).zip(mins.iter()).map(|(prev, cur)| cur - prev).collect();
        Ok(Partition::from_sorted_unchecked(parts))
    }

    /// Least upper bound, via conjugation of the meet of conjugates.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        Ok(self.conjugate().meet(&other.conjugate())?.conjugate())
    }

    /// Multiset union of parts.
    pub fn direct_sum(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Nilpotent Jordan matrix `N_μ` over the rationals.
    pub fn jordan_matrix(&self) -> ExactMatrix {
        self.jordan_matrix_in(ScalarDomain::Rational).expect("rational Jordan matrix always exists")
    }

    /// `N_μ` over the given domain: blocks in order of the parts, ones on
    /// each block's superdiagonal.
    pub fn jordan_matrix_in(&self, domain: ScalarDomain) -> Result<ExactMatrix> {
        let n = self.size();
        let mut m = ExactMatrix::zeros(n, n, domain)?;
        let one = num_rational::BigRational::from_integer(1.into());
        let mut start = 0;
        for &len in &self.parts {
            for k in start..start + len - 1 {
                m.set(k, k + 1, &one)?;
            }
            start += len;
        }
        Ok(m)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// `true` iff `mu ≤ nu` in dominance order.
pub fn dominates(mu: &Partition, nu: &Partition) -> Result<bool> {
    mu.is_dominated_by(nu)
}

/// The minimum of `set` under dominance, if it has one.
///
/// The meet of all members always exists; it is the minimum exactly when it
/// is itself a member.
pub fn min_element<'a, I>(set: I) -> Result<Option<Partition>>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let members: Vec<&Partition> = set.into_iter().collect();
    let (first, rest) = members.split_first().ok_or(Error::EmptyInput("set of partitions"))?;
    let meet = rest.iter().try_fold((*first).clone(), |acc, p| acc.meet(p))?;
    Ok(members.iter().any(|p| **p == meet).then_some(meet))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.pad(&format!("[{}]", inner.join(",")))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses a JSON array such as `[3,1,1]`; order is normalized.
    fn from_str(s: &str) -> Result<Self> {
        let values: Vec<i64> = serde_json::from_str(s)?;
        Partition::new(values)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<i64>::deserialize(d)?;
        Partition::new(values).map_err(serde::de::Error::custom)
    }
}
