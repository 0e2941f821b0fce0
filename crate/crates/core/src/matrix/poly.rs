use std::fmt;

use super::ExactMatrix;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Scalar::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::new(vec![Scalar::one()])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = Scalar::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?.inv()?;
        Ok(Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * &lead).collect(),
        })
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }

    /// `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![Scalar::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Write `self = λ^k · g` with `g(0) ≠ 0`.
    pub fn zero_multiplicity(&self) -> Result<(usize, Polynomial)> {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::DivisionByZero)?;
        Ok((
            k,
            Polynomial {
                coeffs: self.coeffs[k..].to_vec(),
            },
        ))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &ExactMatrix) -> ExactMatrix {
        let n = a.rows();
        let id = ExactMatrix::identity(n, a.cfg());
        self.coeffs
            .iter()
            .rev()
            .fold(ExactMatrix::zeros(n, n, a.cfg()), |acc, c| {
                &(&acc * a) + &id.scale(c)
            })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        if c.is_real() {
                            write!(f, "{c}")?;
                        } else {
                            write!(f, "({c})")?;
                        }
                        f.write_str("*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_multiplicity_examples() {
        let (k, g) = Polynomial::monomial(3).zero_multiplicity().unwrap();
        assert_eq!((k, g), (3, Polynomial::one()));
        // λ²(λ²−1)
        let (k, g) = Polynomial::from_ints(&[0, 0, -1, 0, 1]).zero_multiplicity().unwrap();
        assert_eq!((k, g), (2, Polynomial::from_ints(&[-1, 0, 1])));
        let p = Polynomial::from_ints(&[-5, 1]);
        assert_eq!(p.zero_multiplicity().unwrap(), (0, p.clone()));
    }

    #[test]
    fn division() {
        // (λ² − 1) = (λ − 1)(λ + 1)
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&Polynomial::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, Polynomial::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let (_, r) = p.div_rem(&Polynomial::from_ints(&[0, 2])).unwrap();
        assert_eq!(r, Polynomial::from_ints(&[-1]));
        assert!(Polynomial::from_ints(&[0, 1]).divides(&Polynomial::monomial(4)));
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[0, 0, -3, 0, 1]).to_string(), "x^4 + -3*x^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
