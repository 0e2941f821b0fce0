//! General-purpose group, Drazin and Moore–Penrose inverses.
//!
//! These routines work on any matrix and serve as the reference against
//! which the structured closed forms in [`crate::closedform`] are checked.
//! Non-existence is reported through [`InverseReport::exists`], never as an
//! error.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{ExactMatrix, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InverseKind {
    Group,
    Drazin,
    MoorePenrose,
}

impl InverseKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InverseKind::Group => "group",
            InverseKind::Drazin => "drazin",
            InverseKind::MoorePenrose => "mp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    General,
    ClosedForm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::General => "general",
            Method::ClosedForm => "closed_form",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrazinResult {
    pub inverse: ExactMatrix,
    pub index: usize,
    pub min_poly: Polynomial,
    /// `g` in `ψ = λ^index · g`.
    pub g_part: Polynomial,
}

impl DrazinResult {
    pub(crate) fn from_parts(inverse: ExactMatrix, min_poly: Polynomial) -> Result<Self> {
        let (index, g_part) = min_poly.zero_multiplicity()?;
        Ok(DrazinResult {
            inverse,
            index,
            min_poly,
            g_part,
        })
    }
}

/// Scalars or indices that decide existence, and the condition they test.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub condition: String,
    pub values: Vec<(String, Scalar)>,
    /// 1-based star numbers (or other positions) that violate the condition.
    pub offending: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detail {
    Drazin(DrazinResult),
    Witness(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseReport {
    pub kind: InverseKind,
    pub exists: bool,
    pub matrix: Option<ExactMatrix>,
    pub detail: Detail,
    pub method: Method,
}

impl InverseReport {
    pub fn found(kind: InverseKind, matrix: ExactMatrix, detail: Detail, method: Method) -> Self {
        InverseReport {
            kind,
            exists: true,
            matrix: Some(matrix),
            detail,
            method,
        }
    }

    pub fn missing(kind: InverseKind, witness: Witness, method: Method) -> Self {
        InverseReport {
            kind,
            exists: false,
            matrix: None,
            detail: Detail::Witness(witness),
            method,
        }
    }

    pub fn drazin(result: DrazinResult, method: Method) -> Self {
        InverseReport::found(
            InverseKind::Drazin,
            result.inverse.clone(),
            Detail::Drazin(result),
            method,
        )
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.detail {
            Detail::Witness(w) => Some(w),
            Detail::Drazin(_) => None,
        }
    }
}

/// Group inverse by Cline's theorem: `A = FG` has one iff `GF` is
/// invertible, and then `A^# = F (GF)^{-2} G`.
pub fn group_inverse(a: &ExactMatrix) -> Result<InverseReport> {
    a.require_square()?;
    let kind = InverseKind::Group;
    let frf = match a.full_rank_factorize() {
        Ok(frf) => frf,
        Err(Error::ZeroMatrix) => {
            let witness = Witness {
                condition: "zero matrix is its own group inverse".into(),
                ..Witness::default()
            };
            return Ok(InverseReport::found(
                kind,
                a.clone(),
                Detail::Witness(witness),
                Method::General,
            ));
        }
        Err(e) => return Err(e),
    };
    let gf = &frf.g * &frf.f;
    let witness = Witness {
        condition: "GF nonsingular".into(),
        values: vec![("rank".into(), Scalar::from(frf.rank as i64))],
        offending: Vec::new(),
    };
    match gf.inverse() {
        Ok(gf_inv) => {
            let sq = &gf_inv * &gf_inv;
            let x = &(&frf.f * &sq) * &frf.g;
            Ok(InverseReport::found(kind, x, Detail::Witness(witness), Method::General))
        }
        Err(Error::NotInvertible) => Ok(InverseReport::missing(kind, witness, Method::General)),
        Err(e) => Err(e),
    }
}

/// Drazin inverse from the minimal polynomial `ψ_A = λ^k g(λ)`:
/// `A^D = A^k X^{k+1}` with `X = -(g_1 I + g_2 A + … + g_ℓ A^{ℓ-1}) / g_0`.
pub fn drazin_inverse(a: &ExactMatrix) -> Result<DrazinResult> {
    a.require_square()?;
    let n = a.rows();
    let cfg = a.cfg();
    let min_poly = a.minimal_polynomial()?;
    let (k, g) = min_poly.zero_multiplicity()?;
    let inverse = match g.degree() {
        Some(0) | None => ExactMatrix::zeros(n, n, cfg),
        _ if k == 0 => a.inverse()?,
        Some(ell) => {
            let tail = Polynomial::new(g.coeffs()[1..=ell].to_vec());
            let g0_inv = g.coeff(0).inv()?;
            let x = tail.eval_matrix(a).scale(&-&g0_inv);
            &a.pow(k) * &x.pow(k + 1)
        }
    };
    Ok(DrazinResult {
        inverse,
        index: k,
        min_poly,
        g_part: g,
    })
}

/// Drazin inverse from the core–nilpotent decomposition:
/// `A^D = U · blockdiag(C⁻¹, 0) · U⁻¹`.
pub fn drazin_via_core_nilpotent(a: &ExactMatrix) -> Result<DrazinResult> {
    let cnd = a.core_nilpotent()?;
    let core_inv = cnd.core.inverse()?;
    let nil_size = cnd.nil.rows();
    let mid = ExactMatrix::block_diagonal(&core_inv, &ExactMatrix::zeros(nil_size, nil_size, a.cfg()));
    let inverse = &(&cnd.u * &mid) * &cnd.u_inv;
    // ψ_A = λ^k · ψ_C because ψ_C(0) ≠ 0 and ψ_N = λ^k.
    let core_poly = cnd.core.minimal_polynomial()?;
    let min_poly = Polynomial::monomial(cnd.nil_index).mul(&core_poly);
    Ok(DrazinResult {
        inverse,
        index: cnd.nil_index,
        min_poly,
        g_part: core_poly,
    })
}

/// Cline's formula `(AB)^D = A [(BA)^D]² B`.
pub fn cline_product_drazin(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.cols() != b.rows() || a.rows() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "Cline's formula needs m x n and n x m factors, got {:?} and {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let ba = b.try_mul(a)?;
    let ba_d = drazin_inverse(&ba)?.inverse;
    Ok(&(&(a * &ba_d) * &ba_d) * b)
}

/// Moore–Penrose inverse `A^† = G*(GG*)⁻¹(F*F)⁻¹F*` from a full rank
/// factorization, existing iff both Gram matrices are nonsingular.
pub fn moore_penrose(a: &ExactMatrix) -> Result<InverseReport> {
    let kind = InverseKind::MoorePenrose;
    let frf = match a.full_rank_factorize() {
        Ok(frf) => frf,
        Err(Error::ZeroMatrix) => {
            let witness = Witness {
                condition: "zero matrix: its pseudoinverse is the transposed zero".into(),
                ..Witness::default()
            };
            return Ok(InverseReport::found(
                kind,
                ExactMatrix::zeros(a.cols(), a.rows(), a.cfg()),
                Detail::Witness(witness),
                Method::General,
            ));
        }
        Err(e) => return Err(e),
    };
    let g_adj = frf.g.adjoint();
    let f_adj = frf.f.adjoint();
    let ggs = &frf.g * &g_adj;
    let fsf = &f_adj * &frf.f;
    let ggs_inv = ggs.inverse().ok();
    let fsf_inv = fsf.inverse().ok();
    match (ggs_inv, fsf_inv) {
        (Some(ggs_inv), Some(fsf_inv)) => {
            let x = &(&(&g_adj * &ggs_inv) * &fsf_inv) * &f_adj;
            let witness = Witness {
                condition: "GG* and F*F nonsingular".into(),
                ..Witness::default()
            };
            Ok(InverseReport::found(kind, x, Detail::Witness(witness), Method::General))
        }
        (ggs_inv, fsf_inv) => {
            let mut singular = Vec::new();
            if ggs_inv.is_none() {
                singular.push("GG*");
            }
            if fsf_inv.is_none() {
                singular.push("F*F");
            }
            let witness = Witness {
                condition: format!("singular Gram matrix: {}", singular.join(", ")),
                ..Witness::default()
            };
            Ok(InverseReport::missing(kind, witness, Method::General))
        }
    }
}

/// Checks `A^{k+1}X = A^k`, `XAX = X` and `AX = XA` exactly.
pub fn verify_drazin(a: &ExactMatrix, x: &ExactMatrix, k: usize) -> bool {
    drazin_equations(a, x, k).is_some_and(|f| f.iter().all(|&ok| ok))
}

/// The three Drazin equations one by one, or `None` when the shapes or
/// fields do not match. With `k = 1` these are the group equations.
pub fn drazin_equations(a: &ExactMatrix, x: &ExactMatrix, k: usize) -> Option<[bool; 3]> {
    if !a.is_square() || a.shape() != x.shape() || a.cfg() != x.cfg() {
        return None;
    }
    let ak = a.pow(k);
    let ax = a * x;
    Some([&(a * &ak) * x == ak, &(x * a) * x == *x, ax == x * a])
}

/// Which of the four Penrose equations a candidate satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PenroseFlags {
    /// `AXA = A`
    pub one: bool,
    /// `XAX = X`
    pub two: bool,
    /// `(AX)* = AX`
    pub three: bool,
    /// `(XA)* = XA`
    pub four: bool,
}

impl PenroseFlags {
    pub fn all(&self) -> bool {
        self.one && self.two && self.three && self.four
    }

    pub fn as_array(&self) -> [bool; 4] {
        [self.one, self.two, self.three, self.four]
    }
}

pub fn verify_penrose(a: &ExactMatrix, x: &ExactMatrix) -> Result<PenroseFlags> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(Error::DimensionMismatch(format!(
            "candidate is {:?}, expected {:?}",
            x.shape(),
            (a.cols(), a.rows())
        )));
    }
    let ax = a.try_mul(x)?;
    let xa = x.try_mul(a)?;
    Ok(PenroseFlags {
        one: &ax * a == *a,
        two: &xa * x == *x,
        three: ax.adjoint() == ax,
        four: xa.adjoint() == xa,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSidedInverse {
    pub matrix: ExactMatrix,
    /// `true` for `B*(BB*)⁻¹` / `(C*C)⁻¹C*`; `false` when the Gram matrix is
    /// singular and a pivot-based inverse was returned instead.
    pub gram_based: bool,
}

/// Right inverse of a full-row-rank matrix or left inverse of a
/// full-column-rank one.
pub fn one_sided_inverse(a: &ExactMatrix, side: Side) -> Result<OneSidedInverse> {
    let rank = a.rank();
    match side {
        Side::Right => {
            if rank != a.rows() {
                return Err(Error::RankDeficient(format!(
                    "right inverse needs full row rank {}, got {rank}",
                    a.rows()
                )));
            }
            let adj = a.adjoint();
            if let Ok(gram_inv) = (a * &adj).inverse() {
                return Ok(OneSidedInverse {
                    matrix: &adj * &gram_inv,
                    gram_based: true,
                });
            }
            Ok(OneSidedInverse {
                matrix: pivot_right_inverse(a)?,
                gram_based: false,
            })
        }
        Side::Left => {
            if rank != a.cols() {
                return Err(Error::RankDeficient(format!(
                    "left inverse needs full column rank {}, got {rank}",
                    a.cols()
                )));
            }
            let adj = a.adjoint();
            if let Ok(gram_inv) = (&adj * a).inverse() {
                return Ok(OneSidedInverse {
                    matrix: &gram_inv * &adj,
                    gram_based: true,
                });
            }
            Ok(OneSidedInverse {
                matrix: pivot_right_inverse(&a.transpose())?.transpose(),
                gram_based: false,
            })
        }
    }
}

/// Invert the square submatrix on the pivot columns and zero-fill the rest.
fn pivot_right_inverse(a: &ExactMatrix) -> Result<ExactMatrix> {
    let pivots = a.rref().pivots;
    let square_inv = a.select_columns(&pivots).inverse()?;
    let mut out = ExactMatrix::zeros(a.cols(), a.rows(), a.cfg());
    for (r, &p) in pivots.iter().enumerate() {
        for j in 0..a.rows() {
            out.set(p, j, square_inv.get(r, j).clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;

    fn diag(values: &[i64]) -> ExactMatrix {
        let d: Vec<Scalar> = values.iter().map(|&v| Scalar::from(v)).collect();
        ExactMatrix::diagonal(&d, FieldConfig::RATIONALS)
    }

    #[test]
    fn group_inverse_examples() {
        let e = diag(&[1, 0]);
        let r = group_inverse(&e).unwrap();
        assert!(r.exists);
        assert_eq!(r.matrix.unwrap(), e);

        let j = ExactMatrix::from_ints(&[[0, 1], [0, 0]]);
        let r = group_inverse(&j).unwrap();
        assert!(!r.exists);
        assert!(r.matrix.is_none());

        let z = ExactMatrix::zeros(3, 3, FieldConfig::RATIONALS);
        let r = group_inverse(&z).unwrap();
        assert!(r.exists);
        assert_eq!(r.matrix.unwrap(), z);
    }

    #[test]
    fn drazin_examples_agree_across_routes() {
        let cases = [
            (ExactMatrix::from_ints(&[[0, 1], [0, 0]]), ExactMatrix::zeros(2, 2, FieldConfig::RATIONALS), 2),
            (
                ExactMatrix::from_ints(&[[1, 1], [0, 1]]),
                ExactMatrix::from_ints(&[[1, -1], [0, 1]]),
                0,
            ),
            (
                diag(&[2, 0]),
                ExactMatrix::diagonal(&[Scalar::ratio(1, 2), Scalar::zero()], FieldConfig::RATIONALS),
                1,
            ),
        ];
        for (a, expected, index) in cases {
            for result in [drazin_inverse(&a).unwrap(), drazin_via_core_nilpotent(&a).unwrap()] {
                assert_eq!(result.inverse, expected);
                assert_eq!(result.index, index);
                assert!(verify_drazin(&a, &result.inverse, index));
            }
        }
    }

    #[test]
    fn zero_matrix_drazin_has_index_one() {
        let z = ExactMatrix::zeros(2, 2, FieldConfig::RATIONALS);
        let r = drazin_inverse(&z).unwrap();
        assert_eq!((r.index, r.inverse.is_zero()), (1, true));
    }

    #[test]
    fn cline_examples() {
        let id = ExactMatrix::identity(3, FieldConfig::RATIONALS);
        assert_eq!(cline_product_drazin(&id, &id).unwrap(), id);
        let a = ExactMatrix::from_ints(&[[1], [0]]);
        let b = ExactMatrix::from_ints(&[[1, 0]]);
        assert_eq!(cline_product_drazin(&a, &b).unwrap(), diag(&[1, 0]));
        assert!(matches!(
            cline_product_drazin(&a, &a),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn moore_penrose_examples() {
        let a = ExactMatrix::from_ints(&[[1, 1]]);
        let r = moore_penrose(&a).unwrap();
        let half = Scalar::ratio(1, 2);
        assert_eq!(
            r.matrix.unwrap(),
            ExactMatrix::column(&[half.clone(), half], FieldConfig::RATIONALS)
        );

        let row = vec![Scalar::one(), Scalar::i()];
        let a = ExactMatrix::new(1, 2, row.clone(), FieldConfig::GAUSSIAN_IDENTITY).unwrap();
        let r = moore_penrose(&a).unwrap();
        assert!(!r.exists);
        assert!(r.witness().unwrap().condition.contains("GG*"));

        let a = ExactMatrix::new(1, 2, row, FieldConfig::GAUSSIAN_CONJUGATION).unwrap();
        let x = moore_penrose(&a).unwrap().matrix.unwrap();
        let expected = ExactMatrix::column(
            &[Scalar::ratio(1, 2), Scalar::parse("-1/2i").unwrap()],
            FieldConfig::GAUSSIAN_CONJUGATION,
        );
        assert_eq!(x, expected);
    }

    #[test]
    fn moore_penrose_of_zero_is_transposed_zero() {
        let z = ExactMatrix::zeros(2, 3, FieldConfig::RATIONALS);
        let r = moore_penrose(&z).unwrap();
        assert_eq!(r.matrix.unwrap().shape(), (3, 2));
    }

    #[test]
    fn verify_drazin_rejects_perturbations() {
        let a = ExactMatrix::from_ints(&[[1, 2, 0], [0, 0, 1], [0, 0, 0]]);
        let d = drazin_inverse(&a).unwrap();
        assert!(verify_drazin(&a, &d.inverse, d.index));
        let mut wrong = d.inverse.clone();
        wrong.set(0, 0, wrong.get(0, 0) + &Scalar::one());
        assert!(!verify_drazin(&a, &wrong, d.index));

        let inv = ExactMatrix::from_ints(&[[2, 1], [1, 1]]);
        assert!(verify_drazin(&inv, &inv.inverse().unwrap(), 0));
        let n = ExactMatrix::from_ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert!(verify_drazin(&n, &ExactMatrix::zeros(3, 3, n.cfg()), 3));
    }

    #[test]
    fn penrose_flags() {
        let id = ExactMatrix::identity(2, FieldConfig::RATIONALS);
        let flags = verify_penrose(&id, &id.scale(&Scalar::from(2))).unwrap();
        assert_eq!(flags.as_array(), [false, false, true, true]);
        assert!(verify_penrose(&id, &ExactMatrix::zeros(2, 3, id.cfg())).is_err());
    }

    #[test]
    fn von_neumann_from_one_sided_inverses() {
        let a = ExactMatrix::from_ints(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        let frf = a.full_rank_factorize().unwrap();
        let f_left = one_sided_inverse(&frf.f, Side::Left).unwrap().matrix;
        let g_right = one_sided_inverse(&frf.g, Side::Right).unwrap().matrix;
        let candidate = &g_right * &f_left;
        assert!(verify_penrose(&a, &candidate).unwrap().one);
    }

    #[test]
    fn one_sided_examples() {
        let id = ExactMatrix::identity(2, FieldConfig::RATIONALS);
        assert_eq!(one_sided_inverse(&id, Side::Right).unwrap().matrix, id);
        let half = Scalar::ratio(1, 2);
        let r = one_sided_inverse(&ExactMatrix::from_ints(&[[1, 1]]), Side::Right).unwrap();
        assert!(r.gram_based);
        assert_eq!(r.matrix, ExactMatrix::column(&[half.clone(), half.clone()], FieldConfig::RATIONALS));
        let l = one_sided_inverse(&ExactMatrix::from_ints(&[[1], [1]]), Side::Left).unwrap();
        assert_eq!(l.matrix, ExactMatrix::row_vector(&[half.clone(), half], FieldConfig::RATIONALS));
        assert!(matches!(
            one_sided_inverse(&ExactMatrix::from_ints(&[[1, 1], [2, 2]]), Side::Right),
            Err(Error::RankDeficient(_))
        ));
    }

    #[test]
    fn one_sided_falls_back_when_gram_is_singular() {
        let b = ExactMatrix::new(1, 2, vec![Scalar::one(), Scalar::i()], FieldConfig::GAUSSIAN_IDENTITY)
            .unwrap();
        let r = one_sided_inverse(&b, Side::Right).unwrap();
        assert!(!r.gram_based);
        assert!((&b * &r.matrix).is_identity());
        let c = b.transpose();
        let l = one_sided_inverse(&c, Side::Left).unwrap();
        assert!(!l.gram_based);
        assert!((&l.matrix * &c).is_identity());
    }
}
