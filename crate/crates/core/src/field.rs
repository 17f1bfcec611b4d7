//! Exact arithmetic and dense linear algebra over prime fields.
//!
//! Residues are stored as `u64` in `[0, p)`. The modulus is capped at 2^31 so
//! every product of two residues fits in a `u64` before reduction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_PRIME: u64 = 1 << 31;

/// A prime modulus `p` with `2 <= p <= 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if (2..=MAX_PRIME).contains(&p) && is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub const fn two() -> Self {
        Prime(2)
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_binary(self) -> bool {
        self.0 == 2
    }

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.0
    }

    #[inline]
    pub(crate) fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Inverse of a nonzero residue by Fermat's little theorem.
    pub(crate) fn inv(self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.0) {
            return None;
        }
        Some(self.pow(a, self.0 - 2))
    }

    pub(crate) fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduce an arbitrary signed integer to its canonical residue.
    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A canonical residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    value: u64,
    modulus: Prime,
}

impl FpElement {
    pub fn new(value: u64, modulus: Prime) -> Self {
        FpElement {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn from_i64(value: i64, modulus: Prime) -> Self {
        FpElement {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FpElement) -> Result<Prime> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ))
        }
    }

    pub fn checked_add(self, rhs: FpElement) -> Result<FpElement> {
        let p = self.same_field(rhs)?;
        Ok(FpElement::new(p.add(self.value, rhs.value), p))
    }

    pub fn checked_sub(self, rhs: FpElement) -> Result<FpElement> {
        let p = self.same_field(rhs)?;
        Ok(FpElement::new(p.sub(self.value, rhs.value), p))
    }

    pub fn checked_mul(self, rhs: FpElement) -> Result<FpElement> {
        let p = self.same_field(rhs)?;
        Ok(FpElement::new(p.mul(self.value, rhs.value), p))
    }

    pub fn inv(self) -> Result<FpElement> {
        self.modulus
            .inv(self.value)
            .map(|v| FpElement::new(v, self.modulus))
            .ok_or(Error::DivisionByZero)
    }
}

impl std::ops::Neg for FpElement {
    type Output = FpElement;

    fn neg(self) -> FpElement {
        FpElement::new(self.modulus.neg(self.value), self.modulus)
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over `F_p`.
///
/// Zero-row matrices are permitted so that kernels of injective maps and
/// parity checks of full codes have a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixFp {
    rows: usize,
    cols: usize,
    modulus: Prime,
    data: Vec<u64>,
}

/// Result of a row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: MatrixFp,
    pub rank: usize,
    /// Pivot columns in the order their pivot rows appear.
    pub pivots: Vec<usize>,
}

impl MatrixFp {
    pub fn zeros(rows: usize, cols: usize, modulus: Prime) -> Self {
        MatrixFp {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(size: usize, modulus: Prime) -> Self {
        let mut m = Self::zeros(size, size, modulus);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of canonical residues.
    pub fn from_rows(rows: &[Vec<u64>], modulus: Prime) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::Shape(
                "matrix needs at least one row and one column".into(),
            ));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= modulus.get() {
                    return Err(Error::NotCanonical {
                        value: v,
                        modulus: modulus.get(),
                    });
                }
                data.push(v);
            }
        }
        Ok(MatrixFp {
            rows: rows.len(),
            cols,
            modulus,
            data,
        })
    }

    /// Like [`MatrixFp::from_rows`] but reduces signed entries modulo `p`.
    pub fn from_signed_rows(rows: &[Vec<i64>], modulus: Prime) -> Result<Self> {
        let reduced: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| modulus.reduce(v)).collect())
            .collect();
        Self::from_rows(&reduced, modulus)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn element(&self, r: usize, c: usize) -> FpElement {
        FpElement::new(self.get(r, c), self.modulus)
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_is_zero(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.get(r, c) == 0)
    }

    pub fn transpose(&self) -> MatrixFp {
        let mut t = Self::zeros(self.cols, self.rows, self.modulus);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatrixFp) -> Result<MatrixFp> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.get(),
                rhs.modulus.get(),
            ));
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.modulus;
        let mut out = Self::zeros(self.rows, rhs.cols, p);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = p.add(out.get(i, j), p.mul(a, rhs.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `self * v^T` for a row vector `v`.
    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let p = self.modulus;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b % p.get())))
            })
            .collect())
    }

    /// `m * self` for a row vector `m` of length `rows`.
    pub fn vec_mul(&self, m: &[u64]) -> Vec<u64> {
        let p = self.modulus;
        let mut out = vec![0; self.cols];
        for (r, &coef) in m.iter().enumerate().take(self.rows) {
            if coef == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = p.add(*o, p.mul(coef, g));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn check_columns(&self, columns: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.cols];
        for &c in columns {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    cols: self.cols,
                });
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::DuplicateIndex(c));
            }
        }
        Ok(())
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Result<MatrixFp> {
        self.check_columns(columns)?;
        let mut out = Self::zeros(self.rows, columns.len(), self.modulus);
        for r in 0..self.rows {
            for (j, &c) in columns.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan elimination scanning pivot candidates in `columns` order.
    fn eliminate(&mut self, columns: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let p = self.modulus;
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in columns {
            if next == self.rows {
                break;
            }
            let Some(src) = (next..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(next, src);
            let scale = p.inv(self.get(next, col)).expect("pivot is nonzero");
            for c in 0..self.cols {
                let v = p.mul(self.get(next, c), scale);
                self.set(next, c, v);
            }
            for r in 0..self.rows {
                let f = self.get(r, col);
                if r == next || f == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let v = p.sub(self.get(r, c), p.mul(f, self.get(next, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    /// Canonical reduced row echelon form: leftmost pivots, pivots scaled to 1.
    pub fn rref(&self) -> Echelon {
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(0..self.cols);
        Echelon {
            rank: pivots.len(),
            reduced,
            pivots,
        }
    }

    /// Row reduction that only considers the columns of `columns`, in order.
    ///
    /// When the rank over `columns` equals the row count, row `t` has its unit
    /// pivot in column `columns[t]`.
    pub fn rref_wrt(&self, columns: &[usize]) -> Result<Echelon> {
        self.check_columns(columns)?;
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(columns.iter().copied());
        Ok(Echelon {
            rank: pivots.len(),
            reduced,
            pivots,
        })
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rank of the submatrix on `columns`; zero for the empty set.
    pub fn rank_of_columns(&self, columns: &[usize]) -> Result<usize> {
        self.check_columns(columns)?;
        if columns.is_empty() {
            return Ok(0);
        }
        let mut scratch = self.clone();
        Ok(scratch.eliminate(columns.iter().copied()).len())
    }

    /// Basis of the right kernel `{x : self * x^T = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> MatrixFp {
        let p = self.modulus;
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Self::zeros(free.len(), self.cols, p);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, 1);
            for (r, &pc) in ech.pivots.iter().enumerate() {
                out.set(i, pc, p.neg(ech.reduced.get(r, f)));
            }
        }
        out
    }

    /// Whether `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &[u64]) -> bool {
        if v.len() != self.cols {
            return false;
        }
        let mut stacked = self.data.clone();
        stacked.extend_from_slice(v);
        let m = MatrixFp {
            rows: self.rows + 1,
            cols: self.cols,
            modulus: self.modulus,
            data: stacked,
        };
        m.rank() == self.rank()
    }
}

impl fmt::Display for MatrixFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
