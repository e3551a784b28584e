//! Square matrices over GF(2) of dimension at most 16, stored as one `u16`
//! per row with bit `j` of row `i` holding entry `(i, j)`.
//!
//! Column vectors are `u16` words with bit `i` holding coordinate `i`, so a
//! matrix representing a linear map in a basis has the coordinates of the
//! image of basis vector `j` in column `j`.

use std::fmt;

use thiserror::Error;

pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} outside 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error("line {line}: expected {expected} characters of 0/1")]
    BadRow { line: usize, expected: usize },
    #[error("expected {expected} rows, got {got}")]
    BadRowCount { expected: usize, got: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    dim: u8,
    rows: [u16; MAX_DIM],
}

#[inline]
fn parity(x: u16) -> u16 {
    (x.count_ones() & 1) as u16
}

impl BitMatrix {
    pub fn zero(dim: usize) -> BitMatrix {
        assert!((1..=MAX_DIM).contains(&dim), "bad dimension {dim}");
        BitMatrix { dim: dim as u8, rows: [0; MAX_DIM] }
    }

    pub fn identity(dim: usize) -> BitMatrix {
        let mut m = BitMatrix::zero(dim);
        for i in 0..dim {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn from_rows(rows: &[u16]) -> Result<BitMatrix, MatrixError> {
        let dim = rows.len();
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(MatrixError::BadDimension(dim));
        }
        let mask = Self::mask_for(dim);
        let mut m = BitMatrix::zero(dim);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(MatrixError::BadRow { line: i, expected: dim });
            }
            m.rows[i] = r;
        }
        Ok(m)
    }

    /// Column `j` of the result is `cols[j]`.
    pub fn from_columns(cols: &[u16]) -> Result<BitMatrix, MatrixError> {
        BitMatrix::from_rows(cols).map(|m| m.transpose())
    }

    fn mask_for(dim: usize) -> u16 {
        if dim == 16 {
            u16::MAX
        } else {
            (1u16 << dim) - 1
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.dim()]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn column(&self, j: usize) -> u16 {
        self.rows().iter().enumerate().fold(0, |acc, (i, &r)| acc | ((r >> j & 1) << i))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zero(self.dim());
        for j in 0..self.dim() {
            t.rows[j] = self.column(j);
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        *self == BitMatrix::identity(self.dim())
    }

    fn check_dim(&self, other: &BitMatrix) -> Result<(), MatrixError> {
        if self.dim != other.dim {
            Err(MatrixError::DimensionMismatch(self.dim(), other.dim()))
        } else {
            Ok(())
        }
    }

    /// Matrix product `self * other`. Panics on a dimension mismatch.
    #[inline]
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = BitMatrix::zero(self.dim());
        for i in 0..self.dim() {
            let mut r = self.rows[i];
            let mut acc = 0u16;
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                acc ^= other.rows[j];
                r &= r - 1;
            }
            out.rows[i] = acc;
        }
        out
    }

    pub fn try_mul(&self, other: &BitMatrix) -> Result<BitMatrix, MatrixError> {
        self.check_dim(other)?;
        Ok(self.mul(other))
    }

    #[inline]
    pub fn mul_vec(&self, v: u16) -> u16 {
        self.rows().iter().enumerate().fold(0, |acc, (i, &r)| acc | (parity(r & v) << i))
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = *self;
        for i in 0..self.dim() {
            out.rows[i] ^= other.rows[i];
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> BitMatrix {
        let mut acc = BitMatrix::identity(self.dim());
        let mut base = *self;
        while k != 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        rank_of(self.rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Gauss-Jordan elimination; pivots are taken from the lowest available
    /// row for each column in turn.
    pub fn inverse(&self) -> Result<BitMatrix, MatrixError> {
        let n = self.dim();
        let mut a = *self;
        let mut inv = BitMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.rows[r] >> col & 1 == 1).ok_or(MatrixError::Singular)?;
            a.rows.swap(col, pivot);
            inv.rows.swap(col, pivot);
            for r in 0..n {
                if r != col && a.rows[r] >> col & 1 == 1 {
                    a.rows[r] ^= a.rows[col];
                    inv.rows[r] ^= inv.rows[col];
                }
            }
        }
        Ok(inv)
    }

    /// Rows concatenated LSB-first, row `i` at bits `dim*i ..`. Only defined
    /// for `dim <= 11` so the key fits in 128 bits.
    #[inline]
    pub fn key(&self) -> u128 {
        let d = self.dim();
        assert!(d * d <= 128, "key needs dim <= 11");
        let mut k = 0u128;
        for i in (0..d).rev() {
            k = (k << d) | u128::from(self.rows[i]);
        }
        k
    }

    #[inline]
    pub fn from_key(key: u128, dim: usize) -> BitMatrix {
        let mask = u128::from(Self::mask_for(dim));
        let mut m = BitMatrix::zero(dim);
        for i in 0..dim {
            m.rows[i] = (key >> (dim * i) & mask) as u16;
        }
        m
    }

    /// Parses `dim` lines of `dim` characters `0`/`1`; blank lines and
    /// surrounding whitespace are ignored.
    pub fn parse(text: &str, dim: usize) -> Result<BitMatrix, MatrixError> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != dim {
            return Err(MatrixError::BadRowCount { expected: dim, got: lines.len() });
        }
        let mut rows = Vec::with_capacity(dim);
        for (i, line) in lines.iter().enumerate() {
            if line.len() != dim || !line.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(MatrixError::BadRow { line: i, expected: dim });
            }
            let r = line.bytes().enumerate().fold(0u16, |acc, (j, b)| acc | (u16::from(b == b'1') << j));
            rows.push(r);
        }
        BitMatrix::from_rows(&rows)
    }

    /// Row `i` as a string whose character `j` is entry `(i, j)`.
    pub fn row_string(&self, i: usize) -> String {
        (0..self.dim()).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.row_string(i)).collect()
    }
}

/// Rank of a set of `u16` vectors.
pub fn rank_of(vectors: &[u16]) -> usize {
    let mut basis = EchelonBasis::default();
    vectors.iter().filter(|&&v| basis.insert(v)).count()
}

/// Incrementally maintained basis of a subspace of GF(2)^16, keyed by
/// leading bit.
#[derive(Clone, Default)]
pub struct EchelonBasis {
    by_lead: [u16; MAX_DIM],
    len: usize,
}

impl EchelonBasis {
    pub fn reduce(&self, mut v: u16) -> u16 {
        while v != 0 {
            let lead = 15 - v.leading_zeros() as usize;
            if self.by_lead[lead] == 0 {
                break;
            }
            v ^= self.by_lead[lead];
        }
        v
    }

    /// Adds `v` if it is independent of the current basis.
    pub fn insert(&mut self, v: u16) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let lead = 15 - r.leading_zeros() as usize;
        self.by_lead[lead] = r;
        self.len += 1;
        true
    }

    pub fn contains(&self, v: u16) -> bool {
        self.reduce(v) == 0
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            writeln!(f, "{}", self.row_string(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.dim, self.dim)?;
        fmt::Display::fmt(self, f)
    }
}
