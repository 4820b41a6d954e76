//! Exact rank computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, PrimeField};

/// Rank of a rational matrix given row-major.
///
/// Each row is scaled by the lcm of its denominators, then the integer
/// matrix is reduced with fraction-free (Bareiss) elimination: every
/// intermediate entry is a minor of the scaled matrix, and the division by
/// the previous pivot is exact.
pub(crate) fn rational_rank(rows: usize, cols: usize, entries: &[BigRational]) -> usize {
    let mut a: Vec<Vec<BigInt>> = entries
        .chunks(cols.max(1))
        .take(rows)
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    bareiss_rank(&mut a, cols)
}

pub(crate) fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let num = &prow[col] * &row[j] - &lead * &prow[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

pub(crate) fn modular_rank(field: PrimeField, rows: usize, cols: usize, entries: &[u64]) -> usize {
    let mut a: Vec<Vec<u64>> = entries.chunks(cols.max(1)).take(rows).map(<[u64]>::to_vec).collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = field.inv(&a[rank][col]).expect("pivot is nonzero");
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = field.mul(&row[col], &inv);
            for j in col..cols {
                row[j] = field.sub(&row[j], &field.mul(&factor, &prow[j]));
            }
        }
        rank += 1;
    }
    rank
}
