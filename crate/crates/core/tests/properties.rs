use ginv_core::closedform::{self, CaseTag};
use ginv_core::geninv::{self, verify_drazin, verify_penrose};
use ginv_core::graphs::{build_double_star, swap_stars};
use ginv_core::random::{self, Bounds};
use ginv_core::{ExactMatrix, FieldConfig, Scalar};
use num_traits::Signed;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn gaussian() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(re, im)| Scalar::new(re.re().clone(), im.re().clone()))
}

fn field() -> impl Strategy<Value = FieldConfig> {
    prop_oneof![
        Just(FieldConfig::RATIONALS),
        Just(FieldConfig::GAUSSIAN_CONJUGATION),
        Just(FieldConfig::GAUSSIAN_IDENTITY),
    ]
}

/// Entry that is zero about half the time, so ranks and indices vary.
fn entry(cfg: FieldConfig) -> BoxedStrategy<Scalar> {
    let nonzero = if cfg == FieldConfig::RATIONALS { rational().boxed() } else { gaussian().boxed() };
    prop_oneof![Just(Scalar::zero()), nonzero].boxed()
}

fn matrix(rows: usize, cols: usize, cfg: FieldConfig) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(entry(cfg), rows * cols).prop_map(move |e| ExactMatrix::new(rows, cols, e, cfg).unwrap())
}

fn square() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=5, field()).prop_flat_map(|(n, cfg)| matrix(n, n, cfg))
}

fn any_shape() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4, 1usize..=4, field()).prop_flat_map(|(r, c, cfg)| matrix(r, c, cfg))
}

/// `(B, C)` with `B` p×q and `C` q×p.
fn conformable_pair() -> impl Strategy<Value = (ExactMatrix, ExactMatrix)> {
    (1usize..=4, 1usize..=4, field()).prop_flat_map(|(p, q, cfg)| (matrix(p, q, cfg), matrix(q, p, cfg)))
}

fn permutation(perm: &[usize], cfg: FieldConfig) -> ExactMatrix {
    ExactMatrix::from_fn(perm.len(), perm.len(), cfg, |i, j| {
        if perm[i] == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        // a·ā is a nonnegative rational
        let n = &a * &a.conj();
        prop_assert!(n.is_real());
        prop_assert!(!n.re().is_negative());
    }

    #[test]
    fn scalar_text_round_trips(a in gaussian()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn full_rank_factorization(a in any_shape()) {
        match a.full_rank_factorize() {
            Ok(frf) => {
                prop_assert_eq!(&frf.f * &frf.g, a.clone());
                prop_assert_eq!(frf.rank, a.rank());
                prop_assert_eq!(frf.f.cols(), frf.rank);
                prop_assert_eq!(frf.f.rank(), frf.rank);
                prop_assert_eq!(frf.g.rows(), frf.rank);
                prop_assert_eq!(frf.g.rank(), frf.rank);
            }
            Err(_) => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn minimal_polynomial_annihilates_and_divides_the_characteristic(a in square()) {
        let psi = a.minimal_polynomial().unwrap();
        prop_assert!(psi.is_monic());
        prop_assert!(psi.eval_matrix(&a).is_zero());
        prop_assert!(psi.degree().unwrap() <= a.rows());
        let delta = a.characteristic_polynomial().unwrap();
        prop_assert!(psi.divides(&delta));
        prop_assert!(delta.eval_matrix(&a).is_zero());
    }

    #[test]
    fn similarity_invariance(a in square(), seed in any::<u64>()) {
        let mut rng = random::rng_for(seed, 0);
        let s = random::unimodular(&mut rng, a.rows(), a.cfg());
        let s_inv = s.inverse().unwrap();
        let b = &(&s * &a) * &s_inv;
        let da = geninv::drazin_inverse(&a).unwrap();
        let db = geninv::drazin_inverse(&b).unwrap();
        prop_assert_eq!(&da.min_poly, &db.min_poly);
        prop_assert_eq!(da.index, db.index);
        prop_assert_eq!(&(&s * &da.inverse) * &s_inv, db.inverse);
    }

    #[test]
    fn core_nilpotent_reassembles(a in square()) {
        let cnd = a.core_nilpotent().unwrap();
        prop_assert_eq!(cnd.reassemble(), a.clone());
        prop_assert_eq!(&cnd.u * &cnd.u_inv, ExactMatrix::identity(a.rows(), a.cfg()));
        prop_assert!(cnd.nil.pow(cnd.nil_index).is_zero());
        if cnd.core.rows() > 0 {
            prop_assert!(cnd.core.inverse().is_ok());
        }
    }

    #[test]
    fn drazin_routes_agree_and_satisfy_the_equations(a in square()) {
        let d = geninv::drazin_inverse(&a).unwrap();
        let oracle = geninv::drazin_via_core_nilpotent(&a).unwrap();
        prop_assert_eq!(&d.inverse, &oracle.inverse);
        prop_assert_eq!(d.index, oracle.index);
        prop_assert!(verify_drazin(&a, &d.inverse, d.index));
        if d.index > 0 {
            // the index is the least exponent that works
            prop_assert!(!verify_drazin(&a, &d.inverse, d.index - 1));
        }
        // (A^D)^D = A² A^D
        let dd = geninv::drazin_inverse(&d.inverse).unwrap();
        prop_assert_eq!(dd.inverse, &(&a * &a) * &d.inverse);
        prop_assert!(dd.index <= 1);
    }

    #[test]
    fn group_inverse_exists_iff_rank_is_stable(a in square()) {
        let report = geninv::group_inverse(&a).unwrap();
        prop_assert_eq!(report.exists, a.rank() == (&a * &a).rank());
        if let Some(x) = &report.matrix {
            prop_assert!(verify_drazin(&a, x, 1));
            prop_assert_eq!(x, &geninv::drazin_inverse(&a).unwrap().inverse);
        }
    }

    #[test]
    fn moore_penrose_solves_penrose_and_is_an_involution(a in any_shape()) {
        let report = geninv::moore_penrose(&a).unwrap();
        let star = a.adjoint();
        let expected = a.rank() == (&a * &star).rank() && a.rank() == (&star * &a).rank();
        prop_assert_eq!(report.exists, expected);
        if let Some(x) = &report.matrix {
            prop_assert!(verify_penrose(&a, x).unwrap().all());
            let back = geninv::moore_penrose(x).unwrap();
            prop_assert_eq!(back.matrix.as_ref(), Some(&a));
            prop_assert_eq!(geninv::moore_penrose(&star).unwrap().matrix, Some(x.adjoint()));
        }
    }

    #[test]
    fn moore_penrose_transports_through_permutations(
        a in any_shape(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut rng = random::rng_for(seed, 1);
        let mut rp: Vec<usize> = (0..a.rows()).collect();
        let mut cp: Vec<usize> = (0..a.cols()).collect();
        rp.shuffle(&mut rng);
        cp.shuffle(&mut rng);
        let p = permutation(&rp, a.cfg());
        let q = permutation(&cp, a.cfg());
        let moved = &(&p * &a) * &q;
        let x = geninv::moore_penrose(&a).unwrap();
        let y = geninv::moore_penrose(&moved).unwrap();
        prop_assert_eq!(x.exists, y.exists);
        if let (Some(x), Some(y)) = (&x.matrix, &y.matrix) {
            prop_assert_eq!(y.clone(), &(&q.transpose() * x) * &p.transpose());
        }
    }

    #[test]
    fn cline_formula((b, c) in conformable_pair()) {
        let bc = &b * &c;
        let cb = &c * &b;
        let d_bc = geninv::drazin_inverse(&bc).unwrap();
        let d_cb = geninv::drazin_inverse(&cb).unwrap();
        prop_assert_eq!(geninv::cline_product_drazin(&b, &c).unwrap(), d_bc.inverse.clone());
        prop_assert!(d_bc.index.abs_diff(d_cb.index) <= 1);
        prop_assert_eq!(d_bc.g_part, d_cb.g_part);
    }

    #[test]
    fn swap_is_a_permutation_similarity(seed in any::<u64>(), k in 0usize..5, cfg in field()) {
        let bounds = Bounds { cfg, ..Bounds::default() };
        let spec = random::random_spec(seed, &bounds, CaseTag::ALL[k]).unwrap();
        let (swapped, p) = swap_stars(&spec);
        let m = build_double_star(&spec).unwrap();
        prop_assert_eq!(&(&p * &m) * &p.transpose(), build_double_star(&swapped).unwrap());
        prop_assert_eq!(&p * &p.transpose(), ExactMatrix::identity(spec.order(), cfg));
        let d = closedform::double_star_drazin(&spec).unwrap();
        let ds = closedform::double_star_drazin(&swapped).unwrap();
        prop_assert_eq!(d.index, ds.index);
        prop_assert_eq!(&(&p.transpose() * &ds.inverse) * &p, d.inverse);
    }

    #[test]
    fn double_star_closed_forms_match(seed in any::<u64>(), k in 0usize..5, cfg in field()) {
        let bounds = Bounds { cfg, ..Bounds::default() };
        let spec = random::random_spec(seed, &bounds, CaseTag::ALL[k]).unwrap();
        let m = build_double_star(&spec).unwrap();
        let closed = closedform::double_star_drazin(&spec).unwrap();
        let general = geninv::drazin_inverse(&m).unwrap();
        prop_assert_eq!(closed, general);
        let (mp, witness) = closedform::double_star_mp(&spec).unwrap();
        prop_assert_eq!(mp.exists, witness.exists());
        prop_assert_eq!(mp.matrix, geninv::moore_penrose(&m).unwrap().matrix);
    }
}
