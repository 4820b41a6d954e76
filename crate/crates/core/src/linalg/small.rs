//! Word-size kernels for rational matrices whose entries are all integers.
//!
//! Every kernel uses checked arithmetic and returns `None` on overflow, in
//! which case the caller redoes the work with arbitrary precision.

use num_integer::Integer;

pub(crate) fn add(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    a.iter().zip(b).map(|(x, y)| x.checked_add(*y)).collect()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

pub(crate) fn scale(a: &[i64], c: i64) -> Option<Vec<i64>> {
    a.iter().map(|x| x.checked_mul(c)).collect()
}

/// `(n x k) * (k x m)`, skipping zeros on both sides.
pub(crate) fn mul(a: &[i64], b: &[i64], n: usize, k: usize, m: usize) -> Option<Vec<i64>> {
    let sparse_b: Vec<Vec<(usize, i64)>> =
        (0..k).map(|l| (0..m).filter(|&j| b[l * m + j] != 0).map(|j| (j, b[l * m + j])).collect()).collect();
    let mut out = vec![0i64; n * m];
    for i in 0..n {
        let row = &mut out[i * m..(i + 1) * m];
        for (l, brow) in sparse_b.iter().enumerate() {
            let x = a[i * k + l];
            if x == 0 {
                continue;
            }
            for &(j, y) in brow {
                row[j] = row[j].checked_add(x.checked_mul(y)?)?;
            }
        }
    }
    Some(out)
}

pub(crate) fn kron(a: &[i64], (ar, ac): (usize, usize), b: &[i64], (br, bc): (usize, usize)) -> Option<Vec<i64>> {
    let cols = ac * bc;
    let mut out = vec![0i64; ar * br * cols];
    for i in 0..ar {
        for j in 0..ac {
            let x = a[i * ac + j];
            if x == 0 {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k) * cols + j * bc + l] = x.checked_mul(b[k * bc + l])?;
                }
            }
        }
    }
    Some(out)
}

/// Rank by fraction-free elimination in `i128`, dividing each updated row by
/// the gcd of its entries. Rows whose entry in the pivot column is already
/// zero are left alone, which keeps sparse inputs cheap.
pub(crate) fn rank(rows: usize, cols: usize, entries: &[i64]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = entries
        .chunks(cols.max(1))
        .take(rows)
        .filter(|row| row.iter().any(|&x| x != 0))
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(pivot) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col];
        for row in tail.iter_mut() {
            let lead = row[col];
            if lead == 0 {
                continue;
            }
            let g = pv.gcd(&lead);
            let (sp, sl) = (pv / g, lead / g);
            let mut content = 0i128;
            for j in col..cols {
                let v = sp.checked_mul(row[j])?.checked_sub(sl.checked_mul(prow[j])?)?;
                row[j] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for x in row[col..].iter_mut() {
                    *x /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}
