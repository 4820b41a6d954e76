//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls into the library's own lattice or rank code; each
//! helper recomputes its answer from first principles so it can be used as
//! a reference.

#![allow(dead_code)]

pub mod cli_cases;

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilstrat::strata::ComponentComplex;
use nilstrat::{ExactMatrix, Partition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn part(v: &[i64]) -> Partition {
    Partition::new(v.iter().copied()).unwrap()
}

/// Partitions of `n` as plain vectors, generated by recursive splitting.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=max.min(n) {
            for mut rest in go(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    go(n, n)
}

pub fn to_partition(v: &[usize]) -> Partition {
    Partition::new(v.iter().map(|&x| x as i64)).unwrap()
}

/// `mu ≤ nu` by comparing running totals part by part.
pub fn dominated(mu: &[usize], nu: &[usize]) -> bool {
    let (mut a, mut b) = (0, 0);
    for i in 0..mu.len().max(nu.len()) {
        a += mu.get(i).copied().unwrap_or(0);
        b += nu.get(i).copied().unwrap_or(0);
        if a > b {
            return false;
        }
    }
    true
}

/// Transpose of the Ferrers diagram, cell by cell.
pub fn transpose(mu: &[usize]) -> Vec<usize> {
    let mut cols = vec![0usize; mu.first().copied().unwrap_or(0)];
    for &row in mu {
        for c in cols.iter_mut().take(row) {
            *c += 1;
        }
    }
    cols
}

/// Rank by textbook Gaussian elimination over the rationals.
pub fn naive_rank(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = BigRational::one() / a[rank][col].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][col].is_zero() {
                let f = &a[i][col] * &inv;
                let pivot_row = a[rank].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Square matrices multiplied mod `p` on plain residue slices.
pub fn mod_mul(a: &[u64], b: &[u64], r: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; r * r];
    for i in 0..r {
        for j in 0..r {
            out[i * r + j] = (0..r).map(|k| a[i * r + k] * b[k * r + j] % p).sum::<u64>() % p;
        }
    }
    out
}

pub fn mod_pow(a: &[u64], e: u64, r: usize, p: u64) -> Vec<u64> {
    let mut acc: Vec<u64> = (0..r * r).map(|i| u64::from(i / r == i % r)).collect();
    for _ in 0..e {
        acc = mod_mul(&acc, a, r, p);
    }
    acc
}

/// Random invertible integer matrix: a product of a unit lower and a unit
/// upper triangular matrix with small random entries, then a row shuffle.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> ExactMatrix {
    let mut lower = vec![vec![0i64; n]; n];
    let mut upper = vec![vec![0i64; n]; n];
    for i in 0..n {
        lower[i][i] = 1;
        upper[i][i] = if rng.gen_bool(0.5) { 1 } else { -1 };
        for x in &mut lower[i][..i] {
            *x = rng.gen_range(-3..=3);
        }
        for x in &mut upper[i][i + 1..] {
            *x = rng.gen_range(-3..=3);
        }
    }
    let mut m = ExactMatrix::from_int_rows(&lower).unwrap().mul(&ExactMatrix::from_int_rows(&upper).unwrap()).unwrap();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        if i != j {
            let mut swap = ExactMatrix::identity(n, m.domain()).unwrap();
            swap.set(i, i, &BigRational::zero()).unwrap();
            swap.set(j, j, &BigRational::zero()).unwrap();
            swap.set(i, j, &BigRational::one()).unwrap();
            swap.set(j, i, &BigRational::one()).unwrap();
            m = swap.mul(&m).unwrap();
        }
    }
    m
}

/// A random complex: labels drawn from `Part(n)`, and each point incident to
/// a random nonempty subset of the components.
pub fn random_complex(rng: &mut impl Rng, n: usize, max_components: usize, max_points: usize) -> ComponentComplex {
    let all = partitions_of(n);
    let ncomp = rng.gen_range(1..=max_components);
    let npts = rng.gen_range(1..=max_points);
    let comp_ids: Vec<String> = (0..ncomp).map(|i| format!("c{i}")).collect();
    let components = comp_ids.iter().map(|id| (id.clone(), to_partition(&all[rng.gen_range(0..all.len())]))).collect();
    let points = (0..npts)
        .map(|i| {
            let mut set = BTreeSet::new();
            while set.is_empty() {
                for id in &comp_ids {
                    if rng.gen_bool(0.5) {
                        set.insert(id.clone());
                    }
                }
            }
            (format!("x{i}"), set)
        })
        .collect();
    ComponentComplex::new(n, components, points).unwrap()
}
