//! Exact computations with Jordan types of nilpotent monodromy operators.
//!
//! * [`partition`]: integer partitions under the dominance order, with
//!   conjugation, meets and joins.
//! * [`linalg`]: dense exact matrices over the rationals or a prime field:
//!   ranks, Kronecker products, Jordan types and unipotent logarithms.
//! * [`monodromy`]: Jordan types of Kronecker sums, direct sums and induced
//!   blocks, and the total-type map they compose into.
//! * [`strata`]: finite complexes of partition-labeled components, strata,
//!   point types and minimal lifts.
//! * [`moduli`]: brute-force enumeration of `Φ Σ Φ⁻¹ = Σ^q` over `F_p`.
//! * [`reduced`]: regular complements in `Z^k`.
//! * [`cli`]: the command-line driver behind the `nilstrat` binary.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod moduli;
pub mod monodromy;
pub mod partition;
pub mod reduced;
pub mod strata;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, ScalarDomain};
pub use moduli::{ModuliInstance, Stratification};
pub use monodromy::TameBlockSpec;
pub use partition::Partition;
pub use reduced::ProductRingElem;
pub use strata::{ComponentComplex, ProductFactor};
