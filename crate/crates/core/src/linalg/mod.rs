//! Dense exact linear algebra over the rationals or a prime field.
//!
//! [`ExactMatrix`] carries its scalar domain with it. Rational entries are
//! arbitrary-precision and always in lowest terms; prime-field entries are
//! residues in `[0, p)`. Nothing in this module touches floating point.
//!
//! A rational matrix whose entries are all integers in the `i64` range is
//! held in word-size storage; any operation that overflows or leaves the
//! integers is redone with arbitrary precision. The choice is canonical, so
//! structural equality is equality of matrices.

mod field;
mod json;
mod rank;
mod small;

use std::borrow::Cow;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use field::{Field, PrimeField, Rationals};

pub use field::is_prime;
pub use json::MatrixJson;

/// Scalar domain of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    Rational,
    /// The prime field of the given order.
    PrimeField(u64),
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rational => write!(f, "Q"),
            ScalarDomain::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Entries {
    /// Rational domain, every entry an integer that fits in `i64`.
    Small(Vec<i64>),
    /// Rational domain, some entry outside `i64` integers.
    Rational(Vec<BigRational>),
    Modular {
        p: u64,
        values: Vec<u64>,
    },
}

/// Canonical storage for rational entries.
fn rational_storage(values: Vec<BigRational>) -> Entries {
    let small: Option<Vec<i64>> =
        values.iter().map(|v| if v.is_integer() { i64::try_from(v.numer()).ok() } else { None }).collect();
    match small {
        Some(s) => Entries::Small(s),
        None => Entries::Rational(values),
    }
}

fn to_big(values: &[i64]) -> Vec<BigRational> {
    values.iter().map(|&v| BigRational::from_integer(v.into())).collect()
}

/// Dense row-major matrix with exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Entries,
}

// Generic dense kernels, dispatched per domain by `ExactMatrix`.

fn gen_mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], n: usize, k: usize, m: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); n * m];
    for i in 0..n {
        for l in 0..k {
            let x = &a[i * k + l];
            if f.is_zero(x) {
                continue;
            }
            for j in 0..m {
                let prod = f.mul(x, &b[l * m + j]);
                out[i * m + j] = f.add(&out[i * m + j], &prod);
            }
        }
    }
    out
}

fn gen_kron<F: Field>(
    f: &F,
    a: &[F::Elem],
    (ar, ac): (usize, usize),
    b: &[F::Elem],
    (br, bc): (usize, usize),
) -> Vec<F::Elem> {
    let cols = ac * bc;
    let mut out = vec![f.zero(); ar * br * cols];
    for i in 0..ar {
        for j in 0..ac {
            let x = &a[i * ac + j];
            if f.is_zero(x) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k) * cols + j * bc + l] = f.mul(x, &b[k * bc + l]);
                }
            }
        }
    }
    out
}

fn gen_direct_sum<T: Clone>(zero: T, a: &[T], (ar, ac): (usize, usize), b: &[T], (br, bc): (usize, usize)) -> Vec<T> {
    let cols = ac + bc;
    let mut out = vec![zero; (ar + br) * cols];
    for i in 0..ar {
        out[i * cols..i * cols + ac].clone_from_slice(&a[i * ac..(i + 1) * ac]);
    }
    for i in 0..br {
        let row = ar + i;
        out[row * cols + ac..(row + 1) * cols].clone_from_slice(&b[i * bc..(i + 1) * bc]);
    }
    out
}

/// Gauss-Jordan inverse; `None` when singular.
fn gen_inverse<F: Field>(f: &F, a: &[F::Elem], n: usize) -> Option<Vec<F::Elem>> {
    let mut m: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut row = a[i * n..(i + 1) * n].to_vec();
            row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !f.is_zero(&m[i][col]))?;
        m.swap(col, pivot);
        let inv = f.inv(&m[col][col])?;
        for x in m[col].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let prow = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == col || f.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x = f.sub(x, &f.mul(&factor, p));
            }
        }
    }
    Some(m.into_iter().flat_map(|row| row.into_iter().skip(n)).collect())
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, domain: ScalarDomain) -> Result<Self> {
        let entries = match domain {
            ScalarDomain::Rational => Entries::Small(vec![0; rows * cols]),
            ScalarDomain::PrimeField(p) => {
                PrimeField::new(p)?;
                Entries::Modular { p, values: vec![0; rows * cols] }
            }
        };
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn identity(n: usize, domain: ScalarDomain) -> Result<Self> {
        let mut m = Self::zeros(n, n, domain)?;
        for i in 0..n {
            m.set(i, i, &BigRational::one())?;
        }
        Ok(m)
    }

    /// Rational matrix from rows of rationals.
    pub fn from_rational_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let (r, c) = check_rows(&rows)?;
        Ok(ExactMatrix { rows: r, cols: c, entries: rational_storage(rows.into_iter().flatten().collect()) })
    }

    /// Rational matrix with integer entries.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.as_ref().to_vec()).collect();
        let (r, c) = check_rows(&rows)?;
        Ok(ExactMatrix { rows: r, cols: c, entries: Entries::Small(rows.into_iter().flatten().collect()) })
    }

    /// Prime-field matrix; integer entries are reduced mod `p`.
    pub fn from_mod_rows<R: AsRef<[i64]>>(p: u64, rows: &[R]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let rows: Vec<Vec<u64>> =
            rows.iter().map(|r| r.as_ref().iter().map(|&v| field.reduce_int(&BigInt::from(v))).collect()).collect();
        let (r, c) = check_rows(&rows)?;
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries: Entries::Modular { p, values: rows.into_iter().flatten().collect() },
        })
    }

    /// Prime-field matrix from row-major residues (each reduced mod `p`).
    pub fn from_mod_entries(p: u64, rows: usize, cols: usize, values: Vec<u64>) -> Result<Self> {
        PrimeField::new(p)?;
        if values.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", values.len())));
        }
        let values = values.into_iter().map(|v| v % p).collect();
        Ok(ExactMatrix { rows, cols, entries: Entries::Modular { p, values } })
    }

    /// Re-interprets a rational matrix over the prime field of order `p`.
    pub fn to_prime_field(&self, p: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let values = match &self.entries {
            Entries::Small(v) => v.iter().map(|&x| field.reduce_int(&BigInt::from(x))).collect(),
            Entries::Rational(v) => v.iter().map(|x| field.reduce_rational(x)).collect::<Result<_>>()?,
            Entries::Modular { p: q, .. } if *q == p => return Ok(self.clone()),
            Entries::Modular { .. } => return Err(Error::DomainMismatch(format!("{} to F_{p}", self.domain()))),
        };
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, entries: Entries::Modular { p, values } })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn domain(&self) -> ScalarDomain {
        match self.entries {
            Entries::Small(_) | Entries::Rational(_) => ScalarDomain::Rational,
            Entries::Modular { p, .. } => ScalarDomain::PrimeField(p),
        }
    }

    /// Entry `(i, j)`; prime-field residues are returned as integers in `[0, p)`.
    pub fn get(&self, i: usize, j: usize) -> BigRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        let idx = i * self.cols + j;
        match &self.entries {
            Entries::Small(v) => BigRational::from_integer(v[idx].into()),
            Entries::Rational(v) => v[idx].clone(),
            Entries::Modular { values, .. } => BigRational::from_integer(values[idx].into()),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: &BigRational) -> Result<()> {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        let idx = i * self.cols + j;
        match &mut self.entries {
            Entries::Small(v) => match value.is_integer().then(|| i64::try_from(value.numer()).ok()).flatten() {
                Some(x) => v[idx] = x,
                None => {
                    let mut big = to_big(v);
                    big[idx] = value.clone();
                    self.entries = Entries::Rational(big);
                }
            },
            Entries::Rational(v) => {
                v[idx] = value.clone();
                let v = std::mem::take(v);
                self.entries = rational_storage(v);
            }
            Entries::Modular { p, values } => values[idx] = PrimeField { p: *p }.reduce_rational(value)?,
        }
        Ok(())
    }

    /// Row-major prime-field residues, or `None` for a rational matrix.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.entries {
            Entries::Modular { values, .. } => Some(values),
            _ => None,
        }
    }

    /// Rational entries, row-major; `None` for a prime-field matrix.
    fn rationals(&self) -> Option<Cow<'_, [BigRational]>> {
        match &self.entries {
            Entries::Small(v) => Some(Cow::Owned(to_big(v))),
            Entries::Rational(v) => Some(Cow::Borrowed(v)),
            Entries::Modular { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.entries {
            Entries::Small(v) => v.iter().all(|&x| x == 0),
            Entries::Rational(v) => v.iter().all(Zero::is_zero),
            Entries::Modular { values, .. } => values.iter().all(|&x| x == 0),
        }
    }

    fn same_domain(&self, other: &Self) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!("{} vs {}", self.domain(), other.domain())))
        }
    }

    fn same_shape(&self, other: &Self, op: &str) -> Result<()> {
        self.same_domain(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Applies a binary kernel in the right storage. Domains must already match.
    fn combine(
        &self,
        other: &Self,
        shape: (usize, usize),
        small: impl Fn(&[i64], &[i64]) -> Option<Vec<i64>>,
        big: impl Fn(&[BigRational], &[BigRational]) -> Vec<BigRational>,
        modular: impl Fn(PrimeField, &[u64], &[u64]) -> Vec<u64>,
    ) -> Self {
        let entries = match (&self.entries, &other.entries) {
            (Entries::Modular { p, values: a }, Entries::Modular { values: b, .. }) => {
                Entries::Modular { p: *p, values: modular(PrimeField { p: *p }, a, b) }
            }
            (Entries::Small(a), Entries::Small(b)) => match small(a, b) {
                Some(v) => Entries::Small(v),
                None => rational_storage(big(&to_big(a), &to_big(b))),
            },
            _ => {
                let (a, b) = (self.rationals().expect("rational"), other.rationals().expect("rational"));
                rational_storage(big(&a, &b))
            }
        };
        ExactMatrix { rows: shape.0, cols: shape.1, entries }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sum")?;
        Ok(self.combine(
            other,
            (self.rows, self.cols),
            small::add,
            |a, b| a.iter().zip(b).map(|(x, y)| x + y).collect(),
            |f, a, b| a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "difference")?;
        Ok(self.combine(
            other,
            (self.rows, self.cols),
            small::sub,
            |a, b| a.iter().zip(b).map(|(x, y)| x - y).collect(),
            |f, a, b| a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect(),
        ))
    }

    /// `c * self`; for a prime-field matrix `c` is reduced mod `p`.
    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        let entries = match &self.entries {
            Entries::Modular { p, values } => {
                let f = PrimeField { p: *p };
                let c = f.reduce_rational(c)?;
                Entries::Modular { p: *p, values: values.iter().map(|x| f.mul(x, &c)).collect() }
            }
            Entries::Small(v) if c.is_integer() => {
                match i64::try_from(c.numer()).ok().and_then(|c| small::scale(v, c)) {
                    Some(s) => Entries::Small(s),
                    None => rational_storage(to_big(v).iter().map(|x| x * c).collect()),
                }
            }
            _ => rational_storage(self.rationals().expect("rational").iter().map(|x| x * c).collect()),
        };
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_domain(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        Ok(self.combine(
            other,
            (n, m),
            |a, b| small::mul(a, b, n, k, m),
            |a, b| gen_mul(&Rationals, a, b, n, k, m),
            |f, a, b| gen_mul(&f, a, b, n, k, m),
        ))
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut k: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n, self.domain())?;
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.same_domain(other)?;
        let (a, b) = ((self.rows, self.cols), (other.rows, other.cols));
        Ok(self.combine(
            other,
            (a.0 * b.0, a.1 * b.1),
            |x, y| small::kron(x, a, y, b),
            |x, y| gen_kron(&Rationals, x, a, y, b),
            |f, x, y| gen_kron(&f, x, a, y, b),
        ))
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_domain(other)?;
        let (a, b) = ((self.rows, self.cols), (other.rows, other.cols));
        Ok(self.combine(
            other,
            (a.0 + b.0, a.1 + b.1),
            |x, y| Some(gen_direct_sum(0, x, a, y, b)),
            |x, y| gen_direct_sum(BigRational::zero(), x, a, y, b),
            |_, x, y| gen_direct_sum(0, x, a, y, b),
        ))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let entries = match &self.entries {
            Entries::Modular { p, values } => Entries::Modular {
                p: *p,
                values: gen_inverse(&PrimeField { p: *p }, values, n).ok_or(Error::Singular)?,
            },
            _ => {
                let v = self.rationals().expect("rational");
                rational_storage(gen_inverse(&Rationals, &v, n).ok_or(Error::Singular)?)
            }
        };
        Ok(ExactMatrix { rows: n, cols: n, entries })
    }

    /// Rank over the field of fractions of the scalar domain.
    pub fn rank(&self) -> usize {
        match &self.entries {
            Entries::Small(v) => small::rank(self.rows, self.cols, v)
                .unwrap_or_else(|| rank::rational_rank(self.rows, self.cols, &to_big(v))),
            Entries::Rational(v) => rank::rational_rank(self.rows, self.cols, v),
            Entries::Modular { p, values } => rank::modular_rank(PrimeField { p: *p }, self.rows, self.cols, values),
        }
    }

    /// Rank by arbitrary-precision Bareiss elimination only, bypassing the
    /// word-size path. Rational matrices only.
    pub fn rank_bareiss(&self) -> Option<usize> {
        self.rationals().map(|v| rank::rational_rank(self.rows, self.cols, &v))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `true` iff `self^n = 0` where `n` is the size.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.pow(n as u64)?.is_zero())
    }

    /// Ranks `rk(N^0), rk(N^1), ...` down to the first zero.
    ///
    /// Fails with [`Error::NotNilpotent`] as soon as the sequence stalls at a
    /// positive value, which happens exactly when `N` is not nilpotent.
    pub fn nilpotent_rank_sequence(&self) -> Result<Vec<usize>> {
        let n = self.require_square()?;
        let mut ranks = vec![n];
        let mut power = self.clone();
        while *ranks.last().unwrap() > 0 {
            let r = power.rank();
            if r == *ranks.last().unwrap() {
                return Err(Error::NotNilpotent);
            }
            ranks.push(r);
            if r > 0 {
                power = power.mul(self)?;
            }
        }
        Ok(ranks)
    }

    /// Jordan type of a nilpotent matrix, read off from the ranks of its powers.
    ///
    /// The number of blocks of length at least `i` is `rk(N^(i-1)) - rk(N^i)`;
    /// those counts form the conjugate of the Jordan type.
    pub fn jordan_type(&self) -> Result<Partition> {
        let ranks = self.nilpotent_rank_sequence()?;
        let column_heights: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        Ok(Partition::from_sorted_unchecked(column_heights).conjugate())
    }

    /// Logarithm of a unipotent rational matrix.
    ///
    /// With `X = M - I` nilpotent the series `X - X^2/2 + X^3/3 - ...`
    /// terminates, so the result is exact.
    pub fn unipotent_log(&self) -> Result<Self> {
        let n = self.require_square()?;
        if self.domain() != ScalarDomain::Rational {
            return Err(Error::UnsupportedDomain(format!(
                "logarithm needs division by integers, unavailable over {}",
                self.domain()
            )));
        }
        let x = self.minus_identity()?;
        if !x.is_nilpotent()? {
            return Err(Error::NotUnipotent);
        }
        let mut acc = Self::zeros(n, n, ScalarDomain::Rational)?;
        let mut power = x.clone();
        for k in 1..n.max(1) {
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&BigRational::new(sign.into(), (k as i64).into()))?)?;
            power = power.mul(&x)?;
        }
        Ok(acc)
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<Self> {
        let n = self.require_square()?;
        self.sub(&Self::identity(n, self.domain())?)
    }
}

fn check_rows<T>(rows: &[Vec<T>]) -> Result<(usize, usize)> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("ragged rows: {} vs {cols} entries", bad.len())));
    }
    Ok((rows.len(), cols))
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> =
            (0..self.rows * self.cols).map(|idx| self.get(idx / self.cols, idx % self.cols).to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_basics() {
        assert_eq!(ExactMatrix::identity(4, ScalarDomain::Rational).unwrap().rank(), 4);
        assert_eq!(ExactMatrix::zeros(3, 3, ScalarDomain::Rational).unwrap().rank(), 0);
        let j3 = Partition::new([3]).unwrap().jordan_matrix();
        assert_eq!(j3.rank(), 2);
    }

    #[test]
    fn rank_with_fractions_and_rectangles() {
        let m = ExactMatrix::from_rational_rows(vec![vec![q(1, 2), q(1, 3), q(1, 4)], vec![q(1, 1), q(2, 3), q(1, 2)]])
            .unwrap();
        assert_eq!(m.rank(), 1);
        let m = ExactMatrix::from_int_rows(&[[0, 0], [0, 5], [1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn modular_rank_differs_from_rational() {
        let m = ExactMatrix::from_int_rows(&[[1, 1], [1, 3]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.to_prime_field(2).unwrap().rank(), 1);
    }

    #[test]
    fn kron_rank_example() {
        let i2 = ExactMatrix::identity(2, ScalarDomain::Rational).unwrap();
        let j2 = Partition::new([2]).unwrap().jordan_matrix();
        assert_eq!(i2.kron(&j2).unwrap().rank(), 2);
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let a = ExactMatrix::from_int_rows(&[[1, 2], [3, 4]]).unwrap();
        let b = ExactMatrix::from_int_rows(&[[5, 6, 7], [8, 9, 10], [11, 12, 13]]).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!((s.rows(), s.cols()), (5, 5));
        assert_eq!(s.get(1, 0), q(3, 1));
        assert_eq!(s.get(4, 4), q(13, 1));
        assert_eq!(s.get(0, 4), q(0, 1));
        assert_eq!(s.get(3, 1), q(0, 1));
    }

    #[test]
    fn powers_and_nilpotency() {
        let j2 = Partition::new([2]).unwrap().jordan_matrix();
        assert!(j2.pow(2).unwrap().is_zero());
        assert_eq!(j2.pow(0).unwrap(), ExactMatrix::identity(2, ScalarDomain::Rational).unwrap());
        assert!(j2.is_nilpotent().unwrap());
        assert!(!ExactMatrix::identity(3, ScalarDomain::Rational).unwrap().is_nilpotent().unwrap());
        let rot = ExactMatrix::from_int_rows(&[[0, 1], [-1, 0]]).unwrap();
        assert_eq!(
            rot.pow(2).unwrap(),
            ExactMatrix::identity(2, ScalarDomain::Rational).unwrap().scale(&q(-1, 1)).unwrap()
        );
        assert!(!rot.is_nilpotent().unwrap());
        let rect = ExactMatrix::zeros(2, 3, ScalarDomain::Rational).unwrap();
        assert!(matches!(rect.is_nilpotent(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn mixed_domains_and_shapes_rejected() {
        let a = ExactMatrix::identity(2, ScalarDomain::Rational).unwrap();
        let b = ExactMatrix::identity(2, ScalarDomain::PrimeField(5)).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::DomainMismatch(_))));
        let c = ExactMatrix::identity(3, ScalarDomain::Rational).unwrap();
        assert!(matches!(a.add(&c), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.mul(&c), Err(Error::DimensionMismatch(_))));
        assert!(matches!(ExactMatrix::identity(2, ScalarDomain::PrimeField(6)), Err(Error::InvalidModulus(6))));
    }

    #[test]
    fn jordan_type_examples() {
        let z = ExactMatrix::zeros(4, 4, ScalarDomain::Rational).unwrap();
        assert_eq!(z.jordan_type().unwrap(), Partition::new([1, 1, 1, 1]).unwrap());
        let mu = Partition::new([2, 1]).unwrap();
        assert_eq!(mu.jordan_matrix().jordan_type().unwrap(), mu);
        let id = ExactMatrix::identity(2, ScalarDomain::Rational).unwrap();
        assert_eq!(id.jordan_type(), Err(Error::NotNilpotent));
    }

    #[test]
    fn jordan_type_under_fixed_conjugation() {
        let n = Partition::new([3, 2]).unwrap().jordan_matrix();
        let p = ExactMatrix::from_int_rows(&[
            [1, 2, 0, 0, 1],
            [0, 1, 3, 0, 0],
            [0, 0, 1, -1, 0],
            [2, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ])
        .unwrap();
        let conj = p.mul(&n).unwrap().mul(&p.inverse().unwrap()).unwrap();
        assert_eq!(conj.jordan_type().unwrap(), Partition::new([3, 2]).unwrap());
    }

    #[test]
    fn inverse_round_trip() {
        let p = ExactMatrix::from_int_rows(&[[2, 1], [7, 4]]).unwrap();
        let id = ExactMatrix::identity(2, ScalarDomain::Rational).unwrap();
        assert_eq!(p.mul(&p.inverse().unwrap()).unwrap(), id);
        let s = ExactMatrix::from_int_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(s.inverse(), Err(Error::Singular));
        let m = ExactMatrix::from_mod_rows(7, &[[3, 1], [0, 5]]).unwrap();
        let id7 = ExactMatrix::identity(2, ScalarDomain::PrimeField(7)).unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), id7);
    }

    #[test]
    fn unipotent_log_examples() {
        let id = ExactMatrix::identity(3, ScalarDomain::Rational).unwrap();
        assert!(id.unipotent_log().unwrap().is_zero());
        let m = ExactMatrix::from_int_rows(&[[1, 1], [0, 1]]).unwrap();
        assert_eq!(m.unipotent_log().unwrap(), ExactMatrix::from_int_rows(&[[0, 1], [0, 0]]).unwrap());
    }

    #[test]
    fn unipotent_log_inverts_exponential_of_j3() {
        // exp(J) = I + J + J^2/2 for a single 3-block.
        let j = Partition::new([3]).unwrap().jordan_matrix();
        let id = ExactMatrix::identity(3, ScalarDomain::Rational).unwrap();
        let exp = id.add(&j).unwrap().add(&j.pow(2).unwrap().scale(&q(1, 2)).unwrap()).unwrap();
        assert_eq!(exp.unipotent_log().unwrap(), j);
    }

    #[test]
    fn unipotent_log_errors() {
        let m = ExactMatrix::from_int_rows(&[[2, 0], [0, 1]]).unwrap();
        assert_eq!(m.unipotent_log(), Err(Error::NotUnipotent));
        let m = ExactMatrix::identity(2, ScalarDomain::PrimeField(3)).unwrap();
        assert!(matches!(m.unipotent_log(), Err(Error::UnsupportedDomain(_))));
    }

    #[test]
    fn scale_into_prime_field() {
        let m = ExactMatrix::identity(2, ScalarDomain::PrimeField(5)).unwrap();
        let half = m.scale(&q(1, 2)).unwrap();
        assert_eq!(half.get(0, 0), q(3, 1));
        assert!(matches!(m.scale(&q(1, 5)), Err(Error::DomainMismatch(_))));
    }
}
