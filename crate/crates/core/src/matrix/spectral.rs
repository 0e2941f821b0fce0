use super::{ExactMatrix, Polynomial};
use crate::error::Result;
use crate::field::Scalar;

/// `A = U · blockdiag(core, nil) · U⁻¹` with `core` invertible and `nil`
/// nilpotent of index `nil_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreNilpotentDecomposition {
    pub u: ExactMatrix,
    pub u_inv: ExactMatrix,
    pub core: ExactMatrix,
    pub nil: ExactMatrix,
    pub nil_index: usize,
}

impl CoreNilpotentDecomposition {
    pub fn reassemble(&self) -> ExactMatrix {
        let mid = ExactMatrix::block_diagonal(&self.core, &self.nil);
        &(&self.u * &mid) * &self.u_inv
    }
}

struct ReducedVector {
    pivot: usize,
    values: Vec<Scalar>,
    /// Coefficients of the powers of `A` that combine to `values`.
    combination: Vec<Scalar>,
}

impl ExactMatrix {
    /// Monic annihilating polynomial of least degree.
    ///
    /// Powers `I, A, A², …` are vectorized and reduced against the earlier
    /// ones; the first power that reduces to zero yields the dependency.
    pub fn minimal_polynomial(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut basis: Vec<ReducedVector> = Vec::new();
        let mut power = ExactMatrix::identity(n, self.cfg);
        for degree in 0..=n {
            let mut values = power.vectorize();
            let mut combination = vec![Scalar::zero(); degree + 1];
            combination[degree] = Scalar::one();
            for b in &basis {
                let factor = values[b.pivot].clone();
                if factor.is_zero() {
                    continue;
                }
                for (v, bv) in values.iter_mut().zip(&b.values) {
                    if !bv.is_zero() {
                        *v -= &(&factor * bv);
                    }
                }
                for (c, bc) in combination.iter_mut().zip(&b.combination) {
                    *c -= &(&factor * bc);
                }
            }
            match values.iter().position(|v| !v.is_zero()) {
                None => return Polynomial::new(combination).monic(),
                Some(pivot) => {
                    let inv = values[pivot].inv()?;
                    basis.push(ReducedVector {
                        pivot,
                        values: values.iter().map(|v| v * &inv).collect(),
                        combination: combination.iter().map(|c| c * &inv).collect(),
                    });
                }
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
    }

    /// `det(λI − A)` by the Faddeev–LeVerrier recursion.
    pub fn characteristic_polynomial(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let id = ExactMatrix::identity(n, self.cfg);
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = ExactMatrix::zeros(n, n, self.cfg);
        for k in 1..=n {
            m = &(self * &m) + &id.scale(&coeffs[n - k + 1]);
            let t = (self * &m).trace();
            coeffs[n - k] = -&(&t * &Scalar::ratio(1, k as i64));
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Smallest `k` with `rank(A^{k+1}) = rank(A^k)`.
    pub fn rank_stabilization_index(&self) -> Result<usize> {
        self.require_square()?;
        let mut k = 0;
        let mut power = ExactMatrix::identity(self.rows, self.cfg);
        let mut rank = self.rows;
        loop {
            let next = &power * self;
            let next_rank = next.rank();
            if next_rank == rank {
                return Ok(k);
            }
            power = next;
            rank = next_rank;
            k += 1;
        }
    }

    pub fn core_nilpotent(&self) -> Result<CoreNilpotentDecomposition> {
        let k = self.rank_stabilization_index()?;
        let ak = self.pow(k);
        let range = ak.column_space_basis();
        let kernel = ak.null_space();
        let r = range.cols();
        let u = range.hstack(&kernel)?;
        let u_inv = u.inverse()?;
        let similar = &(&u_inv * self) * &u;
        let n = self.rows;
        let core = similar.submatrix(0, 0, r, r);
        let nil = similar.submatrix(r, r, n - r, n - r);
        let nil_index = if nil.rows() == 0 { 0 } else { k };
        Ok(CoreNilpotentDecomposition {
            u,
            u_inv,
            core,
            nil,
            nil_index,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;

    #[test]
    fn minimal_polynomial_examples() {
        let z = ExactMatrix::zeros(3, 3, FieldConfig::RATIONALS);
        assert_eq!(z.minimal_polynomial().unwrap(), Polynomial::monomial(1));
        let j = ExactMatrix::from_ints(&[[0, 1], [0, 0]]);
        assert_eq!(j.minimal_polynomial().unwrap(), Polynomial::monomial(2));
        let id = ExactMatrix::identity(3, FieldConfig::RATIONALS);
        assert_eq!(id.minimal_polynomial().unwrap(), Polynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn characteristic_polynomial_examples() {
        let id = ExactMatrix::identity(2, FieldConfig::RATIONALS);
        assert_eq!(id.characteristic_polynomial().unwrap(), Polynomial::from_ints(&[1, -2, 1]));
        let swap = ExactMatrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(swap.characteristic_polynomial().unwrap(), Polynomial::from_ints(&[-1, 0, 1]));
        let a = ExactMatrix::from_ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 3]]);
        let psi = a.minimal_polynomial().unwrap();
        let delta = a.characteristic_polynomial().unwrap();
        assert!(psi.divides(&delta));
        assert!(psi.eval_matrix(&a).is_zero());
    }

    #[test]
    fn core_nilpotent_examples() {
        let inv = ExactMatrix::from_ints(&[[1, 1], [0, 1]]);
        let d = inv.core_nilpotent().unwrap();
        assert_eq!(d.nil_index, 0);
        assert_eq!(d.nil.rows(), 0);
        assert_eq!(d.reassemble(), inv);

        let j = ExactMatrix::from_ints(&[[0, 1], [0, 0]]);
        let d = j.core_nilpotent().unwrap();
        assert_eq!(d.core.rows(), 0);
        assert_eq!(d.nil_index, 2);
        assert_eq!(d.reassemble(), j);

        let mixed = ExactMatrix::from_ints(&[[2, 0, 0], [0, 0, 1], [1, 0, 0]]);
        let d = mixed.core_nilpotent().unwrap();
        assert_eq!(d.reassemble(), mixed);
        assert!(d.nil.pow(d.nil_index).is_zero());
        assert!(!d.nil.pow(d.nil_index - 1).is_zero());
        assert!(d.core.inverse().is_ok());
    }
}
