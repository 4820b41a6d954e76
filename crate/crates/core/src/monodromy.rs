//! Jordan-type calculus for monodromy operators.
//!
//! A tame block contributes `Ind(ψ ⊗ τ)` to a representation. Its monodromy
//! is the Kronecker sum `N_ψ ⊗ 1 + 1 ⊗ N_τ`, replicated once per induction
//! copy; the whole representation is the direct sum over blocks. Only Jordan
//! types are tracked, and the map from the per-block types `α_τ` to the
//! total type is monotone for dominance.
//!
//! Characteristic zero throughout.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, ScalarDomain};
use crate::partition::Partition;

/// Configuration of one tame block `τ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TameBlockSpec {
    pub label: String,
    /// `dim τ`.
    pub tau_dim: usize,
    /// Jordan type of the fixed monodromy `N_τ`, a partition of `tau_dim`.
    pub tau_type: Partition,
    /// Number of twisted copies contributed by induction.
    pub mult: usize,
}

impl TameBlockSpec {
    pub fn new(label: impl Into<String>, tau_type: Partition, mult: usize) -> Result<Self> {
        let spec = TameBlockSpec { label: label.into(), tau_dim: tau_type.size(), tau_type, mult };
        spec.validate()?;
        Ok(spec)
    }

    /// `dim τ = 1`, `N_τ = 0`, one copy: the block passes `α` through unchanged.
    pub fn trivial(label: impl Into<String>) -> Self {
        TameBlockSpec { label: label.into(), tau_dim: 1, tau_type: Partition::column(1), mult: 1 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.tau_dim == 0 {
            return Err(Error::InvalidArgument(format!("block {}: tau_dim must be positive", self.label)));
        }
        if self.tau_type.size() != self.tau_dim {
            return Err(Error::SizeMismatch(format!(
                "block {}: tau_type {} is not a partition of tau_dim {}",
                self.label, self.tau_type, self.tau_dim
            )));
        }
        if self.mult == 0 {
            return Err(Error::InvalidArgument(format!("block {}: mult must be positive", self.label)));
        }
        Ok(())
    }

    /// Size of the block's contribution when `α ⊢ r`.
    pub fn output_size(&self, r: usize) -> usize {
        self.mult * self.tau_dim * r
    }
}

fn require_nonempty(p: &Partition, what: &'static str) -> Result<()> {
    if p.is_empty() {
        Err(Error::EmptyInput(what))
    } else {
        Ok(())
    }
}

/// The explicit Kronecker sum `N_α ⊗ I_b + I_a ⊗ N_β`.
pub fn kronecker_sum(alpha: &Partition, beta: &Partition) -> ExactMatrix {
    let (a, b) = (alpha.size(), beta.size());
    let rat = ScalarDomain::Rational;
    let left = alpha.jordan_matrix().kron(&ExactMatrix::identity(b, rat).unwrap()).unwrap();
    let right = ExactMatrix::identity(a, rat).unwrap().kron(&beta.jordan_matrix()).unwrap();
    left.add(&right).expect("both summands are ab x ab")
}

/// Jordan type of the Kronecker sum, computed from the matrix itself.
///
/// This is the defining computation; [`tensor_type`] must agree with it.
pub fn tensor_type_by_matrix(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    require_nonempty(alpha, "tensor factor alpha")?;
    require_nonempty(beta, "tensor factor beta")?;
    kronecker_sum(alpha, beta).jordan_type()
}

/// Jordan type of `N_α ⊗ 1 + 1 ⊗ N_β`.
///
/// Each pair of blocks `J_s, J_t` contributes blocks of sizes
/// `s+t-1, s+t-3, ..., |s-t|+1` (valid in characteristic zero).
pub fn tensor_type(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    require_nonempty(alpha, "tensor factor alpha")?;
    require_nonempty(beta, "tensor factor beta")?;
    let mut parts = Vec::with_capacity(alpha.size() * beta.size());
    for &s in alpha.parts() {
        for &t in beta.parts() {
            let low = s.abs_diff(t) + 1;
            parts.extend((low..=s + t - 1).rev().step_by(2));
        }
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Ok(Partition::new(parts.into_iter().map(|v| v as i64)).expect("block sizes are positive"))
}

/// Multiset union of parts; the empty partition is the identity.
pub fn direct_sum_type(alpha: &Partition, beta: &Partition) -> Partition {
    alpha.direct_sum(beta)
}

/// `mult` copies of `α` side by side.
///
/// Each copy is a twist by a unit scalar, which rescales the nilpotent part
/// and leaves its Jordan type alone.
pub fn induced_type(alpha: &Partition, mult: usize) -> Result<Partition> {
    if mult == 0 {
        return Err(Error::InvalidArgument("induction multiplicity must be positive".into()));
    }
    let parts: Vec<usize> = alpha.parts().iter().flat_map(|&p| std::iter::repeat_n(p, mult)).collect();
    Ok(Partition::from_sorted_unchecked(parts))
}

/// Type of one block: `Ind(α ⊗ tau_type)` with the block's multiplicity.
pub fn block_type(spec: &TameBlockSpec, alpha: &Partition) -> Result<Partition> {
    spec.validate()?;
    induced_type(&tensor_type(alpha, &spec.tau_type)?, spec.mult)
}

/// The monotone map from per-block types to the type of the whole
/// representation: `⊕_τ Ind(α_τ ⊗ tau_type_τ)`.
pub fn total_type<'a, I>(blocks: I) -> Result<Partition>
where
    I: IntoIterator<Item = (&'a TameBlockSpec, &'a Partition)>,
{
    let mut iter = blocks.into_iter().peekable();
    if iter.peek().is_none() {
        return Err(Error::EmptyInput("block list"));
    }
    iter.try_fold(Partition::empty(), |acc, (spec, alpha)| Ok(acc.direct_sum(&block_type(spec, alpha)?)))
}

/// One `{spec, alpha}` entry of the JSON input to [`total_type`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInput {
    pub spec: TameBlockSpec,
    pub alpha: Partition,
}

pub fn total_type_of(inputs: &[BlockInput]) -> Result<Partition> {
    total_type(inputs.iter().map(|b| (&b.spec, &b.alpha)))
}
