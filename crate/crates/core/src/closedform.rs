//! Closed-form generalized inverses for double star and D-linked stars
//! matrices.
//!
//! Every formula here is cross-checked in the test suites against the
//! general algorithms of [`crate::geninv`].

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::geninv::{self, Detail, DrazinResult, InverseKind, InverseReport, Method, Witness};
use crate::graphs::{build_d_linked, build_double_star, gram, swap_stars, DLinkedSpec, DoubleStarSpec};
use crate::matrix::{ExactMatrix, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `xᵀy ≠ 0` and `zᵀw ≠ 0`
    GroupInvertible,
    /// `xᵀy = zᵀw = 0`
    BothZero,
    /// `xᵀy ≠ 0`, `zᵀw = 0`, `ζ = xᵀy + ab ≠ 0`
    FirstNonzeroSecondZero,
    /// `xᵀy = -ab`, `zᵀw = 0`
    NilpotentCase,
    /// `xᵀy = 0`, `zᵀw ≠ 0`
    Mirrored,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [
        CaseTag::GroupInvertible,
        CaseTag::BothZero,
        CaseTag::FirstNonzeroSecondZero,
        CaseTag::NilpotentCase,
        CaseTag::Mirrored,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::GroupInvertible => "group_invertible",
            CaseTag::BothZero => "both_zero",
            CaseTag::FirstNonzeroSecondZero => "first_nonzero_second_zero",
            CaseTag::NilpotentCase => "nilpotent_case",
            CaseTag::Mirrored => "mirrored",
        }
    }

    pub fn parse(text: &str) -> Option<CaseTag> {
        CaseTag::ALL.into_iter().find(|t| t.as_str() == text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleStarCase {
    pub tag: CaseTag,
    pub xy: Scalar,
    pub zw: Scalar,
    /// `xᵀy + ab`, set when `xᵀy ≠ 0` and `zᵀw = 0`.
    pub zeta: Option<Scalar>,
}

pub fn classify_double_star(spec: &DoubleStarSpec) -> Result<DoubleStarCase> {
    spec.validate()?;
    let xy = spec.xy();
    let zw = spec.zw();
    let mut zeta = None;
    let tag = match (xy.is_zero(), zw.is_zero()) {
        (false, false) => CaseTag::GroupInvertible,
        (true, true) => CaseTag::BothZero,
        (true, false) => CaseTag::Mirrored,
        (false, true) => {
            let z = &xy + &spec.ab();
            let tag = if z.is_zero() {
                CaseTag::NilpotentCase
            } else {
                CaseTag::FirstNonzeroSecondZero
            };
            zeta = Some(z);
            tag
        }
    };
    Ok(DoubleStarCase { tag, xy, zw, zeta })
}

/// Vector pieces of a double star spec as matrices.
struct Pieces {
    xt: ExactMatrix,
    y: ExactMatrix,
    zt: ExactMatrix,
    w: ExactMatrix,
}

impl Pieces {
    fn new(spec: &DoubleStarSpec) -> Self {
        Pieces {
            xt: ExactMatrix::row_vector(&spec.x, spec.cfg),
            y: ExactMatrix::column(&spec.y, spec.cfg),
            zt: ExactMatrix::row_vector(&spec.z, spec.cfg),
            w: ExactMatrix::column(&spec.w, spec.cfg),
        }
    }
}

/// Assemble a matrix with the double star block partition `(1, m, 1, n)`.
/// `None` blocks are zero.
fn double_star_layout(spec: &DoubleStarSpec, blocks: [[Option<ExactMatrix>; 4]; 4]) -> Result<ExactMatrix> {
    let sizes = [1, spec.m(), 1, spec.n()];
    let filled: Vec<Vec<ExactMatrix>> = blocks
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, b)| b.unwrap_or_else(|| ExactMatrix::zeros(sizes[i], sizes[j], spec.cfg)))
                .collect()
        })
        .collect();
    let refs: Vec<Vec<&ExactMatrix>> = filled.iter().map(|r| r.iter().collect()).collect();
    let rows: Vec<&[&ExactMatrix]> = refs.iter().map(Vec::as_slice).collect();
    ExactMatrix::block(&rows)
}

fn one_by_one(x: &Scalar, spec: &DoubleStarSpec) -> ExactMatrix {
    ExactMatrix::scalar(x.clone(), spec.cfg)
}

fn wrong_case(expected: &str, actual: CaseTag) -> Error {
    Error::WrongCase {
        expected: expected.into(),
        actual: actual.as_str().into(),
    }
}

/// `M^# = F (GF)^{-2} G` with the four-column factorization
/// `F = [[0,1,a,0],[y,0,0,0],[b,0,0,1],[0,0,w,0]]`,
/// `G = blockdiag(1, xᵀ, 1, zᵀ)`.
pub fn double_star_group(spec: &DoubleStarSpec) -> Result<InverseReport> {
    let case = classify_double_star(spec)?;
    if case.tag != CaseTag::GroupInvertible {
        return Err(wrong_case(CaseTag::GroupInvertible.as_str(), case.tag));
    }
    let x = group_inverse_parts(spec, &case)?;
    let witness = Witness {
        condition: "x^T y != 0 and z^T w != 0".into(),
        values: vec![("xy".into(), case.xy), ("zw".into(), case.zw)],
        offending: Vec::new(),
    };
    Ok(InverseReport::found(
        InverseKind::Group,
        x.inverse,
        Detail::Witness(witness),
        Method::ClosedForm,
    ))
}

/// Group inverse question for any double star: outside the group-invertible
/// case the index is at least 2, so the answer is a witnessed non-existence.
pub fn double_star_group_report(spec: &DoubleStarSpec) -> Result<InverseReport> {
    let case = classify_double_star(spec)?;
    if case.tag == CaseTag::GroupInvertible {
        return double_star_group(spec);
    }
    let witness = Witness {
        condition: "x^T y != 0 and z^T w != 0".into(),
        values: vec![("xy".into(), case.xy), ("zw".into(), case.zw)],
        offending: Vec::new(),
    };
    Ok(InverseReport::missing(InverseKind::Group, witness, Method::ClosedForm))
}

struct GroupParts {
    inverse: ExactMatrix,
    gf: ExactMatrix,
}

fn group_inverse_parts(spec: &DoubleStarSpec, case: &DoubleStarCase) -> Result<GroupParts> {
    let cfg = spec.cfg;
    let p = Pieces::new(spec);
    let one = one_by_one(&Scalar::one(), spec);
    let a = one_by_one(&spec.a, spec);
    let b = one_by_one(&spec.b, spec);
    let (m, n, order) = (spec.m(), spec.n(), spec.order());

    let mut f = ExactMatrix::zeros(order, 4, cfg);
    f.set_block(1, 0, &p.y);
    f.set_block(m + 1, 0, &b);
    f.set_block(0, 1, &one);
    f.set_block(0, 2, &a);
    f.set_block(m + 2, 2, &p.w);
    f.set_block(m + 1, 3, &one);

    let mut g = ExactMatrix::zeros(4, order, cfg);
    g.set_block(0, 0, &one);
    g.set_block(1, 1, &p.xt);
    g.set_block(2, m + 1, &one);
    g.set_block(3, m + 2, &p.zt);
    debug_assert_eq!(g.cols(), m + n + 2);

    let z = Scalar::zero();
    let gf = ExactMatrix::from_rows(
        vec![
            vec![z.clone(), Scalar::one(), spec.a.clone(), z.clone()],
            vec![case.xy.clone(), z.clone(), z.clone(), z.clone()],
            vec![spec.b.clone(), z.clone(), z.clone(), Scalar::one()],
            vec![z.clone(), z.clone(), case.zw.clone(), z],
        ],
        cfg,
    )?;
    let gf_inv = gf.inverse()?;
    let inverse = &(&f * &(&gf_inv * &gf_inv)) * &g;
    Ok(GroupParts { inverse, gf })
}

/// Drazin inverse, index and minimal polynomial by case.
pub fn double_star_drazin(spec: &DoubleStarSpec) -> Result<DrazinResult> {
    let case = classify_double_star(spec)?;
    let p = Pieces::new(spec);
    let ab = spec.ab();
    match case.tag {
        CaseTag::GroupInvertible => {
            let parts = group_inverse_parts(spec, &case)?;
            // Nonzero spectrum of FG matches GF; zero is semisimple.
            let gf_poly = parts.gf.minimal_polynomial()?;
            let index = usize::from(spec.order() > 4);
            let min_poly = Polynomial::monomial(index).mul(&gf_poly);
            DrazinResult::from_parts(parts.inverse, min_poly)
        }
        CaseTag::BothZero => {
            let a_inv = spec.a.inv()?;
            let b_inv = spec.b.inv()?;
            let body = double_star_layout(
                spec,
                [
                    [None, Some(p.xt.clone()), Some(one_by_one(&spec.a, spec)), None],
                    [Some(p.y.clone()), None, None, Some((&p.y * &p.zt).scale(&b_inv))],
                    [Some(one_by_one(&spec.b, spec)), None, None, Some(p.zt.clone())],
                    [None, Some((&p.w * &p.xt).scale(&a_inv)), Some(p.w.clone()), None],
                ],
            )?;
            let min_poly = Polynomial::new(vec![
                Scalar::zero(),
                Scalar::zero(),
                -&ab,
                Scalar::zero(),
                Scalar::one(),
            ]);
            DrazinResult::from_parts(body.scale(&ab.inv()?), min_poly)
        }
        CaseTag::FirstNonzeroSecondZero => {
            let zeta = case.zeta.clone().expect("zeta set for this case");
            let zeta_inv = zeta.inv()?;
            let za = &zeta_inv * &spec.a;
            let zb = &zeta_inv * &spec.b;
            let zab = &zeta_inv * &ab;
            let body = double_star_layout(
                spec,
                [
                    [None, Some(p.xt.clone()), Some(one_by_one(&spec.a, spec)), None],
                    [Some(p.y.clone()), None, None, Some((&p.y * &p.zt).scale(&za))],
                    [Some(one_by_one(&spec.b, spec)), None, None, Some(p.zt.scale(&zab))],
                    [None, Some((&p.w * &p.xt).scale(&zb)), Some(p.w.scale(&zab)), None],
                ],
            )?;
            let min_poly = Polynomial::new(vec![
                Scalar::zero(),
                Scalar::zero(),
                Scalar::zero(),
                -&zeta,
                Scalar::zero(),
                Scalar::one(),
            ]);
            DrazinResult::from_parts(body.scale(&zeta_inv), min_poly)
        }
        CaseTag::NilpotentCase => {
            let order = spec.order();
            DrazinResult::from_parts(
                ExactMatrix::zeros(order, order, spec.cfg),
                Polynomial::monomial(5),
            )
        }
        CaseTag::Mirrored => {
            let (swapped, perm) = swap_stars(spec);
            let inner = double_star_drazin(&swapped)?;
            let pt = perm.transpose();
            let inverse = &(&pt * &inner.inverse) * &perm;
            Ok(DrazinResult { inverse, ..inner })
        }
    }
}

/// Predicted minimal polynomial for the non group-invertible cases.
pub fn minimal_polynomial_prediction(spec: &DoubleStarSpec) -> Result<Polynomial> {
    let case = classify_double_star(spec)?;
    match case.tag {
        CaseTag::GroupInvertible => Err(wrong_case("a non group-invertible case", case.tag)),
        CaseTag::Mirrored => minimal_polynomial_prediction(&swap_stars(spec).0),
        _ => Ok(double_star_drazin(spec)?.min_poly),
    }
}

/// `s = Σ x_i x̄_i`, `u = Σ y_i ȳ_i`, `t = Σ z_i z̄_i`, `v = Σ w_i w̄_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpWitness {
    pub s: Scalar,
    pub u: Scalar,
    pub t: Scalar,
    pub v: Scalar,
}

impl MpWitness {
    pub fn new(spec: &DoubleStarSpec) -> Self {
        MpWitness {
            s: gram(&spec.x, spec.cfg),
            u: gram(&spec.y, spec.cfg),
            t: gram(&spec.z, spec.cfg),
            v: gram(&spec.w, spec.cfg),
        }
    }

    pub fn exists(&self) -> bool {
        [&self.s, &self.u, &self.t, &self.v].iter().all(|x| !x.is_zero())
    }

    fn named(&self) -> Vec<(String, Scalar)> {
        vec![
            ("s".into(), self.s.clone()),
            ("u".into(), self.u.clone()),
            ("t".into(), self.t.clone()),
            ("v".into(), self.v.clone()),
        ]
    }
}

/// Moore–Penrose inverse of a double star matrix:
///
/// ```text
/// [ 0        u⁻¹y*           0      0            ]
/// [ s⁻¹x̄     0               0     -s⁻¹a v⁻¹ x̄w* ]
/// [ 0        0               0      v⁻¹w*        ]
/// [ 0       -t⁻¹b u⁻¹ z̄y*    t⁻¹z̄   0            ]
/// ```
pub fn double_star_mp(spec: &DoubleStarSpec) -> Result<(InverseReport, MpWitness)> {
    spec.validate()?;
    let wit = MpWitness::new(spec);
    let names = ["s", "u", "t", "v"];
    let values = [&wit.s, &wit.u, &wit.t, &wit.v];
    let zero_names: Vec<&str> = names
        .iter()
        .zip(values)
        .filter(|(_, v)| v.is_zero())
        .map(|(n, _)| *n)
        .collect();
    if !zero_names.is_empty() {
        let witness = Witness {
            condition: format!("s, u, t, v nonzero; zero: {}", zero_names.join(", ")),
            values: wit.named(),
            offending: Vec::new(),
        };
        return Ok((
            InverseReport::missing(InverseKind::MoorePenrose, witness, Method::ClosedForm),
            wit,
        ));
    }
    let cfg = spec.cfg;
    let (s_inv, u_inv, t_inv, v_inv) = (wit.s.inv()?, wit.u.inv()?, wit.t.inv()?, wit.v.inv()?);
    let x_bar = ExactMatrix::column(&spec.x, cfg).involuted();
    let z_bar = ExactMatrix::column(&spec.z, cfg).involuted();
    let y_adj = ExactMatrix::column(&spec.y, cfg).adjoint();
    let w_adj = ExactMatrix::column(&spec.w, cfg).adjoint();
    let xw = (&x_bar * &w_adj).scale(&-&(&(&s_inv * &spec.a) * &v_inv));
    let zy = (&z_bar * &y_adj).scale(&-&(&(&t_inv * &spec.b) * &u_inv));
    let x = double_star_layout(
        spec,
        [
            [None, Some(y_adj.scale(&u_inv)), None, None],
            [Some(x_bar.scale(&s_inv)), None, None, Some(xw)],
            [None, None, None, Some(w_adj.scale(&v_inv))],
            [None, Some(zy), Some(z_bar.scale(&t_inv)), None],
        ],
    )?;
    let witness = Witness {
        condition: "s, u, t, v nonzero".into(),
        values: wit.named(),
        offending: Vec::new(),
    };
    Ok((
        InverseReport::found(InverseKind::MoorePenrose, x, Detail::Witness(witness), Method::ClosedForm),
        wit,
    ))
}

fn one_based_zeros(values: &[Scalar]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_zero())
        .map(|(i, _)| i + 1)
        .collect()
}

/// `M^# = [[0, (BC)⁻¹B], [C(BC)⁻¹, −C(BC)⁻¹A(BC)⁻¹B]]`, existing iff every
/// `x_iᵀy_i ≠ 0`.
pub fn d_linked_group(spec: &DLinkedSpec) -> Result<InverseReport> {
    let mats = build_d_linked(spec)?;
    let pairings = spec.pairings();
    let offending = one_based_zeros(&pairings);
    let values = pairings
        .iter()
        .enumerate()
        .map(|(i, p)| (format!("x{}^T y{}", i + 1, i + 1), p.clone()))
        .collect();
    let witness = Witness {
        condition: "x_i^T y_i != 0 for all i".into(),
        values,
        offending,
    };
    if !witness.offending.is_empty() {
        return Ok(InverseReport::missing(InverseKind::Group, witness, Method::ClosedForm));
    }
    let cfg = spec.cfg();
    let inv_diag: Vec<Scalar> = pairings.iter().map(|p| p.inv()).collect::<Result<_>>()?;
    let bc_inv = ExactMatrix::diagonal(&inv_diag, cfg);
    let top_right = &bc_inv * &mats.b;
    let bottom_left = &mats.c * &bc_inv;
    let bottom_right = -&(&(&bottom_left * &spec.base) * &top_right);
    let n = spec.base.rows();
    let x = ExactMatrix::block(&[
        &[&ExactMatrix::zeros(n, n, cfg), &top_right],
        &[&bottom_left, &bottom_right],
    ])?;
    Ok(InverseReport::found(InverseKind::Group, x, Detail::Witness(witness), Method::ClosedForm))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DLinkedDrazin {
    pub result: DrazinResult,
    /// `i(A) + 2`
    pub predicted_index: usize,
}

/// Drazin inverse of a D-linked stars matrix whose stars all pair to zero.
/// The inverse comes from the general algorithm; the index is predicted as
/// `i(A) + 2`.
pub fn d_linked_drazin(spec: &DLinkedSpec) -> Result<DLinkedDrazin> {
    let mats = build_d_linked(spec)?;
    let violated: Vec<usize> = spec
        .pairings()
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, _)| i + 1)
        .collect();
    if !violated.is_empty() {
        return Err(Error::HypothesisViolated(violated));
    }
    let predicted_index = geninv::drazin_inverse(&spec.base)?.index + 2;
    let result = geninv::drazin_inverse(&mats.m)?;
    Ok(DLinkedDrazin {
        result,
        predicted_index,
    })
}

/// `M^† = [[0, (C*C)⁻¹C*], [B*(BB*)⁻¹, −B*(BB*)⁻¹ A (C*C)⁻¹C*]]`, existing iff
/// every `x_i x_i*` and `y_i* y_i` is nonzero.
pub fn d_linked_mp(spec: &DLinkedSpec) -> Result<InverseReport> {
    let mats = build_d_linked(spec)?;
    let cfg = spec.cfg();
    let bb: Vec<Scalar> = spec.stars.iter().map(|s| gram(&s.x, cfg)).collect();
    let cc: Vec<Scalar> = spec.stars.iter().map(|s| gram(&s.y, cfg)).collect();
    let mut offending = one_based_zeros(&bb);
    offending.extend(one_based_zeros(&cc));
    offending.sort_unstable();
    offending.dedup();
    let mut values = Vec::with_capacity(2 * bb.len());
    for (i, (p, q)) in bb.iter().zip(&cc).enumerate() {
        values.push((format!("x{}* x{}", i + 1, i + 1), p.clone()));
        values.push((format!("y{}* y{}", i + 1, i + 1), q.clone()));
    }
    let witness = Witness {
        condition: "x_i* x_i != 0 and y_i* y_i != 0 for all i".into(),
        values,
        offending,
    };
    if !witness.offending.is_empty() {
        return Ok(InverseReport::missing(InverseKind::MoorePenrose, witness, Method::ClosedForm));
    }
    let bb_inv = ExactMatrix::diagonal(&bb.iter().map(Scalar::inv).collect::<Result<Vec<_>>>()?, cfg);
    let cc_inv = ExactMatrix::diagonal(&cc.iter().map(Scalar::inv).collect::<Result<Vec<_>>>()?, cfg);
    let c_dag = &cc_inv * &mats.c.adjoint();
    let b_dag = &mats.b.adjoint() * &bb_inv;
    let bottom_right = -&(&(&b_dag * &spec.base) * &c_dag);
    let n = spec.base.rows();
    let x = ExactMatrix::block(&[
        &[&ExactMatrix::zeros(n, n, cfg), &c_dag],
        &[&b_dag, &bottom_right],
    ])?;
    Ok(InverseReport::found(InverseKind::MoorePenrose, x, Detail::Witness(witness), Method::ClosedForm))
}

/// Convenience: the double star matrix together with its classification.
pub fn double_star_matrix(spec: &DoubleStarSpec) -> Result<(ExactMatrix, DoubleStarCase)> {
    Ok((build_double_star(spec)?, classify_double_star(spec)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;
    use crate::geninv::{drazin_inverse, verify_drazin, verify_penrose};
    use crate::graphs::Star;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from(x)).collect()
    }

    fn spec(x: &[i64], y: &[i64], z: &[i64], w: &[i64]) -> DoubleStarSpec {
        DoubleStarSpec {
            a: Scalar::one(),
            b: Scalar::one(),
            x: v(x),
            y: v(y),
            z: v(z),
            w: v(w),
            cfg: FieldConfig::RATIONALS,
        }
    }

    fn both_zero() -> DoubleStarSpec {
        spec(&[1, 1], &[1, -1], &[1, 1], &[1, -1])
    }

    fn first_nonzero() -> DoubleStarSpec {
        spec(&[1, 1], &[1, 1], &[1, 1], &[1, -1])
    }

    fn nilpotent() -> DoubleStarSpec {
        spec(&[1, 1], &[1, -2], &[1, 1], &[1, -1])
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_double_star(&both_zero()).unwrap().tag, CaseTag::BothZero);
        let c = classify_double_star(&first_nonzero()).unwrap();
        assert_eq!(c.tag, CaseTag::FirstNonzeroSecondZero);
        assert_eq!(c.zeta, Some(Scalar::from(3)));
        assert_eq!(classify_double_star(&nilpotent()).unwrap().tag, CaseTag::NilpotentCase);
    }

    #[test]
    fn case_formulas_match_general_drazin() {
        for (s, index, poly) in [
            (both_zero(), 2, Polynomial::from_ints(&[0, 0, -1, 0, 1])),
            (first_nonzero(), 3, Polynomial::from_ints(&[0, 0, 0, -3, 0, 1])),
            (nilpotent(), 5, Polynomial::monomial(5)),
        ] {
            let m = build_double_star(&s).unwrap();
            let closed = double_star_drazin(&s).unwrap();
            let general = drazin_inverse(&m).unwrap();
            assert_eq!(closed.index, index);
            assert_eq!(closed.min_poly, poly);
            assert_eq!(general.min_poly, poly);
            assert_eq!(closed.inverse, general.inverse);
            assert!(verify_drazin(&m, &closed.inverse, index));
            assert_eq!(minimal_polynomial_prediction(&s).unwrap(), poly);
        }
    }

    #[test]
    fn nilpotent_fourth_power_is_the_last_corner() {
        let s = nilpotent();
        let m = build_double_star(&s).unwrap();
        let m4 = m.pow(4);
        assert!(m.pow(5).is_zero());
        let k = 4; // start of the second star's leaves
        let wz = &ExactMatrix::column(&s.w, s.cfg) * &ExactMatrix::row_vector(&s.z, s.cfg);
        let mut expected = ExactMatrix::zeros(m.rows(), m.cols(), s.cfg);
        expected.set_block(k, k, &wz.scale(&s.ab()));
        assert_eq!(m4, expected);
    }

    #[test]
    fn group_case_and_wrong_case() {
        let s = spec(&[1], &[1], &[1], &[1]);
        let m = build_double_star(&s).unwrap();
        let closed = double_star_group(&s).unwrap();
        let general = geninv::group_inverse(&m).unwrap();
        assert_eq!(closed.matrix, general.matrix);
        assert!(matches!(double_star_group(&both_zero()), Err(Error::WrongCase { .. })));
        assert!(matches!(
            minimal_polynomial_prediction(&s),
            Err(Error::WrongCase { .. })
        ));
        for s in [both_zero(), first_nonzero(), nilpotent()] {
            let report = double_star_group_report(&s).unwrap();
            assert!(!report.exists);
            assert!(!geninv::group_inverse(&build_double_star(&s).unwrap()).unwrap().exists);
        }
    }

    #[test]
    fn mirrored_case_goes_through_the_swap() {
        let s = spec(&[1, 1], &[1, -1], &[2, 1], &[1, 1]);
        let c = classify_double_star(&s).unwrap();
        assert_eq!(c.tag, CaseTag::Mirrored);
        let m = build_double_star(&s).unwrap();
        let closed = double_star_drazin(&s).unwrap();
        let general = drazin_inverse(&m).unwrap();
        assert_eq!(closed.inverse, general.inverse);
        assert_eq!(closed.index, 3);
        assert_eq!(closed.min_poly, general.min_poly);
    }

    #[test]
    fn mp_all_ones() {
        let s = spec(&[1], &[1], &[1], &[1]);
        let (report, wit) = double_star_mp(&s).unwrap();
        assert_eq!((wit.s.clone(), wit.u.clone(), wit.t.clone(), wit.v.clone()), (1.into(), 1.into(), 1.into(), 1.into()));
        let expected = ExactMatrix::from_ints(&[[0, 1, 0, 0], [1, 0, 0, -1], [0, 0, 0, 1], [0, -1, 1, 0]]);
        assert_eq!(report.matrix.clone().unwrap(), expected);
        let m = build_double_star(&s).unwrap();
        assert!(verify_penrose(&m, &expected).unwrap().all());
    }

    #[test]
    fn mp_isotropic_x() {
        let mut s = DoubleStarSpec {
            a: Scalar::one(),
            b: Scalar::one(),
            x: vec![Scalar::one(), Scalar::i()],
            y: v(&[1, 1]),
            z: v(&[1]),
            w: v(&[1]),
            cfg: FieldConfig::GAUSSIAN_IDENTITY,
        };
        let (report, wit) = double_star_mp(&s).unwrap();
        assert!(wit.s.is_zero());
        assert!(!report.exists);
        let m = build_double_star(&s).unwrap();
        assert!(!geninv::moore_penrose(&m).unwrap().exists);

        s.cfg = FieldConfig::GAUSSIAN_CONJUGATION;
        let (report, wit) = double_star_mp(&s).unwrap();
        assert_eq!(wit.s, Scalar::from(2));
        let m = build_double_star(&s).unwrap();
        let x = report.matrix.unwrap();
        assert!(verify_penrose(&m, &x).unwrap().all());
        assert_eq!(Some(x), geninv::moore_penrose(&m).unwrap().matrix);
    }

    fn unit_stars(n: usize) -> Vec<Star> {
        (0..n).map(|_| Star { x: v(&[1]), y: v(&[1]) }).collect()
    }

    #[test]
    fn d_linked_group_unit_stars_is_the_inverse() {
        let s = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[0, 1], [1, 0]]),
            stars: unit_stars(2),
        };
        let m = build_d_linked(&s).unwrap().m;
        let r = d_linked_group(&s).unwrap();
        let expected = ExactMatrix::from_ints(&[[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, -1], [0, 1, -1, 0]]);
        assert_eq!(r.matrix.clone().unwrap(), expected);
        assert_eq!(r.matrix.unwrap(), m.inverse().unwrap());
    }

    #[test]
    fn d_linked_group_reports_offending_star() {
        let s = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[0, 1], [1, 0]]),
            stars: vec![Star { x: v(&[1, 1]), y: v(&[1, -1]) }, Star { x: v(&[1]), y: v(&[1]) }],
        };
        let r = d_linked_group(&s).unwrap();
        assert!(!r.exists);
        assert_eq!(r.witness().unwrap().offending, vec![1]);
    }

    #[test]
    fn d_linked_index_examples() {
        let stars = || {
            vec![
                Star { x: v(&[1, 1]), y: v(&[1, -1]) },
                Star { x: v(&[1, 1]), y: v(&[1, -1]) },
            ]
        };
        for (base, expected) in [
            (ExactMatrix::from_ints(&[[0, 1], [0, 0]]), 4),
            (ExactMatrix::identity(2, FieldConfig::RATIONALS), 2),
            (ExactMatrix::from_ints(&[[1, 0], [0, 0]]), 3),
        ] {
            let r = d_linked_drazin(&DLinkedSpec { base, stars: stars() }).unwrap();
            assert_eq!(r.predicted_index, expected);
            assert_eq!(r.result.index, expected);
        }
        let bad = DLinkedSpec {
            base: ExactMatrix::identity(2, FieldConfig::RATIONALS),
            stars: unit_stars(2),
        };
        assert_eq!(d_linked_drazin(&bad), Err(Error::HypothesisViolated(vec![1, 2])));
    }

    #[test]
    fn d_linked_mp_examples() {
        let s = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[1, 2], [0, 3]]),
            stars: unit_stars(2),
        };
        let m = build_d_linked(&s).unwrap().m;
        let x = d_linked_mp(&s).unwrap().matrix.unwrap();
        assert!(verify_penrose(&m, &x).unwrap().all());

        let cfg = FieldConfig::GAUSSIAN_IDENTITY;
        let s = DLinkedSpec {
            base: ExactMatrix::identity(1, cfg),
            stars: vec![Star { x: vec![Scalar::one(), Scalar::i()], y: vec![Scalar::one(), Scalar::one()] }],
        };
        let r = d_linked_mp(&s).unwrap();
        assert!(!r.exists);
        assert_eq!(r.witness().unwrap().offending, vec![1]);
    }
}
