//! Brute-force points of the moduli relation `Φ Σ Φ⁻¹ = Σ^q` over a prime field.
//!
//! Every pair of invertible `r x r` matrices over `F_p` is tested, so the
//! candidate space has `p^(2r²)` elements and is guarded by a cap. The
//! relation is checked in the inverse-free form `Φ Σ = Σ^q Φ`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_prime, ExactMatrix, ScalarDomain};
use crate::partition::Partition;

/// Default cap on the number of candidate pairs, `2^24`.
pub const DEFAULT_PAIR_CAP: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliInstance {
    /// Exponent in the relation.
    pub q: u64,
    /// Matrix size.
    pub r: usize,
    /// Field characteristic.
    pub p: u64,
    /// Power of `Σ` whose unipotent part is stratified.
    pub a: Option<u64>,
    pub cap: u128,
}

impl ModuliInstance {
    pub fn new(q: u64, r: usize, p: u64) -> Result<Self> {
        let inst = ModuliInstance { q, r, p, a: None, cap: DEFAULT_PAIR_CAP };
        inst.check()?;
        Ok(inst)
    }

    pub fn with_a(mut self, a: u64) -> Result<Self> {
        self.a = Some(a);
        self.check()?;
        Ok(self)
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    fn check(&self) -> Result<()> {
        if !is_prime(self.p) || self.p >= 1 << 32 {
            return Err(Error::InvalidModulus(self.p));
        }
        if self.r == 0 {
            return Err(Error::InvalidArgument("matrix size r must be positive".into()));
        }
        if self.q == 0 {
            return Err(Error::InvalidArgument("exponent q must be positive".into()));
        }
        if self.a == Some(0) {
            return Err(Error::InvalidArgument("exponent a must be positive".into()));
        }
        Ok(())
    }

    /// `p^(2r²)`, or `None` on overflow.
    pub fn candidate_count(&self) -> Option<u128> {
        let exp = u32::try_from(2 * self.r * self.r).ok()?;
        (self.p as u128).checked_pow(exp)
    }

    fn check_cap(&self) -> Result<()> {
        self.check()?;
        match self.candidate_count() {
            Some(c) if c <= self.cap => Ok(()),
            Some(c) => Err(Error::ResourceLimit { required: format!("{c} candidate pairs"), cap: self.cap }),
            None => Err(Error::ResourceLimit {
                required: format!("{}^{} candidate pairs", self.p, 2 * self.r * self.r),
                cap: self.cap,
            }),
        }
    }
}

/// Row-major residues of an `r x r` matrix.
type Small = Vec<u64>;

struct Ctx {
    r: usize,
    p: u64,
}

impl Ctx {
    fn mul(&self, a: &[u64], b: &[u64]) -> Small {
        let r = self.r;
        let mut out = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let x = a[i * r + k];
                if x == 0 {
                    continue;
                }
                for j in 0..r {
                    out[i * r + j] = (out[i * r + j] + x * b[k * r + j]) % self.p;
                }
            }
        }
        out
    }

    fn identity(&self) -> Small {
        let mut m = vec![0; self.r * self.r];
        for i in 0..self.r {
            m[i * self.r + i] = 1;
        }
        m
    }

    fn pow(&self, m: &[u64], mut k: u64) -> Small {
        let mut acc = self.identity();
        let mut base = m.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn to_exact(&self, m: &[u64]) -> ExactMatrix {
        ExactMatrix::from_mod_entries(self.p, self.r, self.r, m.to_vec()).expect("valid prime and shape")
    }

    /// All invertible matrices, in lexicographic order of entry tuples.
    fn general_linear(&self) -> Vec<Small> {
        let len = self.r * self.r;
        let total = (self.p as u128).pow(len as u32) as u64;
        (0..total)
            .into_par_iter()
            .filter_map(|mut code| {
                let mut m = vec![0; len];
                for slot in m.iter_mut().rev() {
                    *slot = code % self.p;
                    code /= self.p;
                }
                self.to_exact(&m).is_invertible().then_some(m)
            })
            .collect()
    }
}

/// The context, `GL_r(F_p)` in lexicographic order, and the solution pairs.
type Solutions = (Ctx, Vec<Small>, Vec<(Small, Small)>);

fn solutions(inst: &ModuliInstance) -> Result<Solutions> {
    inst.check_cap()?;
    let ctx = Ctx { r: inst.r, p: inst.p };
    let gl = ctx.general_linear();
    let powered: Vec<Small> = gl.iter().map(|s| ctx.pow(s, inst.q)).collect();
    let pairs = gl
        .par_iter()
        .flat_map_iter(|phi| {
            let ctx = &ctx;
            gl.iter()
                .zip(&powered)
                .filter(move |(sigma, sigma_q)| ctx.mul(phi, sigma) == ctx.mul(sigma_q, phi))
                .map(move |(sigma, _)| (phi.clone(), sigma.clone()))
        })
        .collect();
    Ok((ctx, gl, pairs))
}

/// A solution `(Φ, Σ)` of the relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPair {
    pub phi: ExactMatrix,
    pub sigma: ExactMatrix,
}

/// All pairs of invertible matrices with `Φ Σ Φ⁻¹ = Σ^q`, ordered
/// lexicographically by the entries of `Φ` and then `Σ`.
pub fn enumerate_pairs(inst: &ModuliInstance) -> Result<Vec<MatrixPair>> {
    let (ctx, _, pairs) = solutions(inst)?;
    Ok(pairs.iter().map(|(phi, sigma)| MatrixPair { phi: ctx.to_exact(phi), sigma: ctx.to_exact(sigma) }).collect())
}

/// Bucket counts of the Jordan type of `Σ^a - I`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Stratification {
    pub total: usize,
    pub buckets: BTreeMap<Partition, usize>,
    /// Pairs where `Σ^a` is not unipotent.
    pub residual: usize,
}

#[derive(Serialize, Deserialize)]
struct StratificationJson {
    total: usize,
    buckets: BTreeMap<String, usize>,
    residual: usize,
}

impl Stratification {
    /// `{"total": t, "buckets": {"[2,1]": c, ...}, "residual": s}`.
    pub fn to_json_string(&self) -> String {
        let j = StratificationJson {
            total: self.total,
            buckets: self.buckets.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            residual: self.residual,
        };
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: StratificationJson = serde_json::from_str(s)?;
        Ok(Stratification {
            total: j.total,
            buckets: j.buckets.into_iter().map(|(k, v)| Ok((k.parse::<Partition>()?, v))).collect::<Result<_>>()?,
            residual: j.residual,
        })
    }
}

/// Sorts every solution by `ν(Σ^a - I)`; non-unipotent `Σ^a` go to the residual.
pub fn sigma_stratify(inst: &ModuliInstance) -> Result<Stratification> {
    let a = inst.a.ok_or_else(|| Error::InvalidArgument("stratification needs the exponent a".into()))?;
    let (ctx, _, pairs) = solutions(inst)?;
    let mut out = Stratification { total: pairs.len(), ..Default::default() };
    let mut cache: BTreeMap<&Small, Option<Partition>> = BTreeMap::new();
    for (_, sigma) in &pairs {
        let ty = cache.entry(sigma).or_insert_with(|| {
            let shifted = ctx.to_exact(&ctx.pow(sigma, a)).minus_identity().expect("square");
            shifted.jordan_type().ok()
        });
        match ty {
            Some(t) => *out.buckets.entry(t.clone()).or_default() += 1,
            None => out.residual += 1,
        }
    }
    Ok(out)
}

/// Multiplicative order of an invertible prime-field matrix.
pub fn multiplicative_order(sigma: &ExactMatrix) -> Result<u64> {
    let ScalarDomain::PrimeField(_) = sigma.domain() else {
        return Err(Error::UnsupportedDomain("multiplicative order is computed over prime fields".into()));
    };
    if !sigma.is_square() {
        return Err(Error::NotSquare { rows: sigma.rows(), cols: sigma.cols() });
    }
    if !sigma.is_invertible() {
        return Err(Error::Singular);
    }
    let id = ExactMatrix::identity(sigma.rows(), sigma.domain())?;
    let mut power = sigma.clone();
    let mut order = 1;
    while power != id {
        power = power.mul(sigma)?;
        order += 1;
    }
    Ok(order)
}

/// `ν(Σ^{o'} - I)` where `o'` is the prime-to-`p` part of the order of `Σ`.
pub fn unipotent_part_type(sigma: &ExactMatrix) -> Result<Partition> {
    let order = multiplicative_order(sigma)?;
    let ScalarDomain::PrimeField(p) = sigma.domain() else { unreachable!() };
    let mut prime_to_p = order;
    while prime_to_p % p == 0 {
        prime_to_p /= p;
    }
    sigma.pow(prime_to_p)?.minus_identity()?.jordan_type()
}

/// Number of orbits of solutions under `(Φ, Σ) ↦ (gΦg⁻¹, gΣg⁻¹)`.
pub fn orbit_count(inst: &ModuliInstance) -> Result<usize> {
    Ok(orbits(inst)?.len())
}

/// Solution orbits under simultaneous conjugation, each listed by its
/// lexicographically first member and its size.
pub fn orbits(inst: &ModuliInstance) -> Result<Vec<(MatrixPair, usize)>> {
    let (ctx, gl, pairs) = solutions(inst)?;
    let with_inverse: Vec<(Small, Small)> = gl
        .iter()
        .map(|g| {
            let inv = ctx.to_exact(g).inverse().expect("invertible");
            (g.clone(), inv.residues().expect("prime field").to_vec())
        })
        .collect();
    let mut seen: HashSet<(Small, Small)> = HashSet::new();
    let mut out = Vec::new();
    for pair in &pairs {
        if seen.contains(pair) {
            continue;
        }
        let orbit: HashSet<(Small, Small)> = with_inverse
            .iter()
            .map(|(g, gi)| (ctx.mul(&ctx.mul(g, &pair.0), gi), ctx.mul(&ctx.mul(g, &pair.1), gi)))
            .collect();
        out.push((MatrixPair { phi: ctx.to_exact(&pair.0), sigma: ctx.to_exact(&pair.1) }, orbit.len()));
        seen.extend(orbit);
    }
    Ok(out)
}
