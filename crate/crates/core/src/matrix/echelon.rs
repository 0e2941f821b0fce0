use super::ExactMatrix;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Reduced row echelon form with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `A = F·G` with `F` the pivot columns of `A` and `G` the nonzero rows of
/// `rref(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullRankFactorization {
    pub f: ExactMatrix,
    pub g: ExactMatrix,
    pub rank: usize,
}

/// Gauss-Jordan elimination on a row-major buffer. Returns pivot columns.
fn eliminate(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for e in rows[r][c..].iter_mut() {
                *e = &*e * &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let factor = other[c].clone();
            if factor.is_zero() {
                continue;
            }
            for (e, p) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *e -= &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl ExactMatrix {
    pub fn rref(&self) -> Rref {
        let mut rows = self.to_rows();
        let pivots = eliminate(&mut rows, self.cols);
        let reduced = ExactMatrix::from_fn(self.rows, self.cols, self.cfg, |i, j| {
            rows[i][j].clone()
        });
        Rref { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let pivots = eliminate(&mut rows, n);
        if pivots.len() < n {
            return Err(Error::NotInvertible);
        }
        Ok(ExactMatrix::from_fn(n, n, self.cfg, |i, j| rows[i][n + j].clone()))
    }

    /// Basis of the kernel, one column per free variable.
    pub fn null_space(&self) -> ExactMatrix {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = ExactMatrix::zeros(self.cols, free.len(), self.cfg);
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Scalar::one());
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(p, k, -reduced.get(r, f));
            }
        }
        basis
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn column_space_basis(&self) -> ExactMatrix {
        self.select_columns(&self.rref().pivots)
    }

    pub fn full_rank_factorize(&self) -> Result<FullRankFactorization> {
        let Rref { reduced, pivots } = self.rref();
        let rank = pivots.len();
        if rank == 0 {
            return Err(Error::ZeroMatrix);
        }
        Ok(FullRankFactorization {
            f: self.select_columns(&pivots),
            g: reduced.submatrix(0, 0, rank, self.cols),
            rank,
        })
    }
}

/// Inverse of `[[alpha, beta], [gamma, I]]` through the Schur complement
/// `sigma = alpha - beta·gamma` of the identity corner.
pub fn schur_corner_inverse(
    alpha: &ExactMatrix,
    beta: &ExactMatrix,
    gamma: &ExactMatrix,
) -> Result<ExactMatrix> {
    alpha.require_square()?;
    let p = alpha.rows();
    let q = beta.cols();
    if beta.rows() != p || gamma.rows() != q || gamma.cols() != p {
        return Err(Error::DimensionMismatch(format!(
            "blocks {:?}, {:?}, {:?} do not form [[alpha, beta], [gamma, I]]",
            alpha.shape(),
            beta.shape(),
            gamma.shape()
        )));
    }
    let sigma = alpha.try_sub(&beta.try_mul(gamma)?)?;
    let sigma_inv = sigma.inverse()?;
    let top_right = -&(&sigma_inv * beta);
    let gamma_sigma = gamma * &sigma_inv;
    let bottom_left = -&gamma_sigma;
    let bottom_right = &ExactMatrix::identity(q, alpha.cfg()) + &(&gamma_sigma * beta);
    ExactMatrix::block(&[&[&sigma_inv, &top_right], &[&bottom_left, &bottom_right]])
}
