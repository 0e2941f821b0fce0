//! Dense exact matrices.
//!
//! The arithmetic operators on `&ExactMatrix` panic on non-conformable
//! operands, like most dense linear algebra crates; the named methods
//! ([`ExactMatrix::try_mul`] and friends) return a `Result` instead.

mod echelon;
mod poly;
mod spectral;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use echelon::{schur_corner_inverse, FullRankFactorization, Rref};
pub use poly::Polynomial;
pub use spectral::CoreNilpotentDecomposition;

use crate::error::{Error, Result};
use crate::field::{FieldConfig, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
    cfg: FieldConfig,
}

impl ExactMatrix {
    /// Row-major constructor; every entry must lie in `cfg`'s field.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>, cfg: FieldConfig) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            cfg.check(e)?;
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
            cfg,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cfg: FieldConfig) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        ExactMatrix::new(r, c, rows.into_iter().flatten().collect(), cfg)
    }

    /// Integer matrix over the rationals, mostly for tests and examples.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        let entries = rows.iter().flatten().map(|&v| Scalar::from(v)).collect();
        ExactMatrix {
            rows: rows.len(),
            cols: C,
            entries,
            cfg: FieldConfig::RATIONALS,
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        cfg: FieldConfig,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
            cfg,
        }
    }

    pub fn zeros(rows: usize, cols: usize, cfg: FieldConfig) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
            cfg,
        }
    }

    pub fn identity(n: usize, cfg: FieldConfig) -> Self {
        let mut m = ExactMatrix::zeros(n, n, cfg);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(diag: &[Scalar], cfg: FieldConfig) -> Self {
        let n = diag.len();
        ExactMatrix::from_fn(n, n, cfg, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Column vector.
    pub fn column(v: &[Scalar], cfg: FieldConfig) -> Self {
        ExactMatrix {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
            cfg,
        }
    }

    /// Row vector.
    pub fn row_vector(v: &[Scalar], cfg: FieldConfig) -> Self {
        ExactMatrix {
            rows: 1,
            cols: v.len(),
            entries: v.to_vec(),
            cfg,
        }
    }

    pub fn scalar(x: Scalar, cfg: FieldConfig) -> Self {
        ExactMatrix {
            rows: 1,
            cols: 1,
            entries: vec![x],
            cfg,
        }
    }

    /// Assemble a block matrix. Every block in a block-row must have the
    /// same number of rows, and block-columns must agree in width.
    pub fn block(blocks: &[&[&ExactMatrix]]) -> Result<Self> {
        let Some(first_row) = blocks.first() else {
            return Err(Error::DimensionMismatch("empty block layout".into()));
        };
        let widths: Vec<usize> = first_row.iter().map(|b| b.cols).collect();
        let cfg = first_row
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty block row".into()))?
            .cfg;
        let mut heights = Vec::with_capacity(blocks.len());
        for (bi, row) in blocks.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(Error::DimensionMismatch(format!(
                    "block row {bi} has {} blocks, expected {}",
                    row.len(),
                    widths.len()
                )));
            }
            let h = row[0].rows;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != h || b.cols != widths[bj] {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({bi},{bj}) is {}x{}, expected {h}x{}",
                        b.rows, b.cols, widths[bj]
                    )));
                }
            }
            heights.push(h);
        }
        let rows = heights.iter().sum();
        let cols = widths.iter().sum();
        let mut out = ExactMatrix::zeros(rows, cols, cfg);
        let mut r0 = 0;
        for (row, h) in blocks.iter().zip(&heights) {
            let mut c0 = 0;
            for b in row.iter() {
                out.set_block(r0, c0, b);
                c0 += b.cols;
            }
            r0 += h;
        }
        Ok(out)
    }

    pub fn block_diagonal(a: &ExactMatrix, b: &ExactMatrix) -> Self {
        let mut out = ExactMatrix::zeros(a.rows + b.rows, a.cols + b.cols, a.cfg);
        out.set_block(0, 0, a);
        out.set_block(a.rows, a.cols, b);
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn cfg(&self) -> FieldConfig {
        self.cfg
    }

    /// Same entries, read in another field. Fails if an entry leaves the field.
    pub fn with_cfg(&self, cfg: FieldConfig) -> Result<Self> {
        ExactMatrix::new(self.rows, self.cols, self.entries.clone(), cfg)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, self.cfg, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose with respect to the configured involution.
    pub fn adjoint(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, self.cfg, |i, j| {
            self.cfg.involute(self.get(j, i))
        })
    }

    /// Entrywise involution without transposing.
    pub fn involuted(&self) -> Self {
        ExactMatrix {
            entries: self.entries.iter().map(|e| self.cfg.involute(e)).collect(),
            ..self.clone()
        }
    }

    fn check_cfg(&self, other: &ExactMatrix) -> Result<()> {
        if self.cfg == other.cfg {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "field mismatch: {:?} vs {:?}",
                self.cfg, other.cfg
            )))
        }
    }

    pub fn try_mul(&self, rhs: &ExactMatrix) -> Result<Self> {
        self.check_cfg(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols, self.cfg);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        rhs: &ExactMatrix,
        op: &str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Self> {
        self.check_cfg(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(ExactMatrix {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
            ..self.clone()
        })
    }

    pub fn try_add(&self, rhs: &ExactMatrix) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &ExactMatrix) -> Result<Self> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        ExactMatrix {
            entries: self.entries.iter().map(|e| e * s).collect(),
            ..self.clone()
        }
    }

    /// `self^k`; `self^0` is the identity.
    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = ExactMatrix::identity(self.rows, self.cfg);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        ExactMatrix::from_fn(rows, cols, self.cfg, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        ExactMatrix::from_fn(self.rows, idx.len(), self.cfg, |i, j| {
            self.get(i, idx[j]).clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        ExactMatrix::from_fn(idx.len(), self.cols, self.cfg, |i, j| {
            self.get(idx[i], j).clone()
        })
    }

    pub fn hstack(&self, rhs: &ExactMatrix) -> Result<Self> {
        ExactMatrix::block(&[&[self, rhs]])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &ExactMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    /// Entries read column by column.
    pub fn vectorize(&self) -> Vec<Scalar> {
        (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| self.get(i, j).clone()))
            .collect()
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&Scalar::from(-1))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{} {:?}\n{}", self.rows, self.cols, self.cfg, self)
    }
}
