//! Seeded generators for double star specs, D-linked specs and test
//! matrices. Numerators and denominators are drawn with magnitude at most
//! [`Bounds::magnitude`]; entries solved to force a dot product may exceed it.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closedform::{classify_double_star, CaseTag};
use crate::error::{Error, Result};
use crate::field::{Base, FieldConfig, Scalar};
use crate::graphs::{dot, DLinkedSpec, DoubleStarSpec, Star};
use crate::matrix::ExactMatrix;

const MAX_ATTEMPTS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_m: usize,
    pub max_n: usize,
    pub magnitude: i64,
    pub cfg: FieldConfig,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_m: 5,
            max_n: 5,
            magnitude: 10,
            cfg: FieldConfig::RATIONALS,
        }
    }
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn ratio<R: Rng>(rng: &mut R, magnitude: i64, allow_zero: bool) -> Scalar {
    let num = loop {
        let v = rng.gen_range(-magnitude..=magnitude);
        if allow_zero || v != 0 {
            break v;
        }
    };
    Scalar::ratio(num, rng.gen_range(1..=magnitude))
}

/// Small exact scalar; over ℚ(i) the imaginary part is zero half the time.
pub fn scalar<R: Rng>(rng: &mut R, magnitude: i64, cfg: FieldConfig, nonzero: bool) -> Scalar {
    loop {
        let re = ratio(rng, magnitude, true);
        let im = if cfg.base() == Base::GaussianRationals && rng.gen_bool(0.5) {
            ratio(rng, magnitude, true)
        } else {
            Scalar::zero()
        };
        let x = &re + &(&im * &Scalar::i());
        if !nonzero || !x.is_zero() {
            return x;
        }
    }
}

pub fn nonzero_vector<R: Rng>(rng: &mut R, len: usize, magnitude: i64, cfg: FieldConfig) -> Vec<Scalar> {
    (0..len).map(|_| scalar(rng, magnitude, cfg, true)).collect()
}

/// Overwrite the last entry of `v` so that `uᵀv = target`. Fails when the
/// solved entry would be zero.
fn solve_last(u: &[Scalar], v: &mut [Scalar], target: &Scalar) -> bool {
    let k = v.len() - 1;
    let partial = dot(&u[..k], &v[..k]);
    let entry = (target - &partial).div(&u[k]).expect("u is strictly nonzero");
    if entry.is_zero() {
        return false;
    }
    v[k] = entry;
    true
}

/// Random double star spec that classifies to `target`.
pub fn random_double_star<R: Rng>(rng: &mut R, bounds: &Bounds, target: CaseTag) -> Result<DoubleStarSpec> {
    let (min_m, min_n) = match target {
        CaseTag::GroupInvertible | CaseTag::FirstNonzeroSecondZero | CaseTag::NilpotentCase => {
            (1, if target == CaseTag::GroupInvertible { 1 } else { 2 })
        }
        CaseTag::BothZero => (2, 2),
        CaseTag::Mirrored => (2, 1),
    };
    if bounds.max_m < min_m || bounds.max_n < min_n || bounds.magnitude < 1 {
        return Err(Error::UnreachableCase(format!(
            "{} needs m >= {min_m}, n >= {min_n}; bounds allow m <= {}, n <= {}",
            target.as_str(),
            bounds.max_m,
            bounds.max_n
        )));
    }
    let cfg = bounds.cfg;
    let mag = bounds.magnitude;
    let zero = Scalar::zero();
    for _ in 0..MAX_ATTEMPTS {
        let m = rng.gen_range(min_m..=bounds.max_m);
        let n = rng.gen_range(min_n..=bounds.max_n);
        let a = scalar(rng, mag, cfg, true);
        let b = scalar(rng, mag, cfg, true);
        let x = nonzero_vector(rng, m, mag, cfg);
        let mut y = nonzero_vector(rng, m, mag, cfg);
        let z = nonzero_vector(rng, n, mag, cfg);
        let mut w = nonzero_vector(rng, n, mag, cfg);
        let ok = match target {
            CaseTag::BothZero => solve_last(&x, &mut y, &zero) && solve_last(&z, &mut w, &zero),
            CaseTag::NilpotentCase => {
                let target_xy = -&(&a * &b);
                solve_last(&x, &mut y, &target_xy) && solve_last(&z, &mut w, &zero)
            }
            CaseTag::FirstNonzeroSecondZero => solve_last(&z, &mut w, &zero),
            // Half of the mirrored specs swap into the nilpotent case.
            CaseTag::Mirrored => {
                solve_last(&x, &mut y, &zero)
                    && (rng.gen_bool(0.5) || solve_last(&z, &mut w, &-&(&a * &b)))
            }
            CaseTag::GroupInvertible => true,
        };
        if !ok {
            continue;
        }
        let spec = DoubleStarSpec { a, b, x, y, z, w, cfg };
        if classify_double_star(&spec)?.tag == target {
            return Ok(spec);
        }
    }
    Err(Error::UnreachableCase(format!(
        "no {} spec found in {MAX_ATTEMPTS} attempts",
        target.as_str()
    )))
}

/// Deterministic double star spec for a seed.
pub fn random_spec(seed: u64, bounds: &Bounds, target: CaseTag) -> Result<DoubleStarSpec> {
    random_double_star(&mut ChaCha8Rng::seed_from_u64(seed), bounds, target)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingTarget {
    /// Every `x_iᵀ y_i ≠ 0`.
    Nonzero,
    /// Every `x_iᵀ y_i = 0`; needs star sizes of at least 2.
    Zero,
    /// No constraint.
    Any,
}

pub fn random_stars<R: Rng>(
    rng: &mut R,
    count: usize,
    max_r: usize,
    magnitude: i64,
    cfg: FieldConfig,
    pairing: PairingTarget,
) -> Result<Vec<Star>> {
    let min_r = if pairing == PairingTarget::Zero { 2 } else { 1 };
    if max_r < min_r {
        return Err(Error::UnreachableCase(format!(
            "zero pairing needs star size >= 2, bound is {max_r}"
        )));
    }
    let zero = Scalar::zero();
    let mut stars = Vec::with_capacity(count);
    while stars.len() < count {
        let r = rng.gen_range(min_r..=max_r);
        let x = nonzero_vector(rng, r, magnitude, cfg);
        let mut y = nonzero_vector(rng, r, magnitude, cfg);
        let ok = match pairing {
            PairingTarget::Zero => solve_last(&x, &mut y, &zero),
            PairingTarget::Nonzero => !dot(&x, &y).is_zero(),
            PairingTarget::Any => true,
        };
        if ok {
            stars.push(Star { x, y });
        }
    }
    Ok(stars)
}

/// Random square matrix with roughly `density` nonzero entries.
pub fn sparse_matrix<R: Rng>(rng: &mut R, n: usize, density: f64, magnitude: i64, cfg: FieldConfig) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, cfg, |_, _| {
        if rng.gen_bool(density) {
            scalar(rng, magnitude, cfg, true)
        } else {
            Scalar::zero()
        }
    })
}

pub fn random_d_linked<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_r: usize,
    magnitude: i64,
    cfg: FieldConfig,
    pairing: PairingTarget,
) -> Result<DLinkedSpec> {
    let n = rng.gen_range(1..=max_n);
    let base = sparse_matrix(rng, n, 0.5, magnitude, cfg);
    let stars = random_stars(rng, n, max_r, magnitude, cfg, pairing)?;
    Ok(DLinkedSpec { base, stars })
}

/// Nilpotent Jordan block of size `k`: ones on the superdiagonal.
pub fn jordan_nilpotent(k: usize, cfg: FieldConfig) -> ExactMatrix {
    ExactMatrix::from_fn(k, k, cfg, |i, j| {
        if j == i + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// Jordan block `J_k(λ)`.
pub fn jordan_block(k: usize, lambda: &Scalar, cfg: FieldConfig) -> ExactMatrix {
    let mut j = jordan_nilpotent(k, cfg);
    for i in 0..k {
        j.set(i, i, lambda.clone());
    }
    j
}

/// Direct sum of Jordan blocks with Drazin index exactly `index`: one
/// nilpotent block of size `index`, possibly smaller nilpotent blocks, and
/// blocks with nonzero eigenvalues, in shuffled order.
pub fn jordan_sum_with_index<R: Rng>(rng: &mut R, index: usize, max_extra: usize, cfg: FieldConfig) -> ExactMatrix {
    let mut blocks: Vec<ExactMatrix> = Vec::new();
    if index > 0 {
        blocks.push(jordan_nilpotent(index, cfg));
        if index > 1 && rng.gen_bool(0.5) {
            blocks.push(jordan_nilpotent(rng.gen_range(1..index), cfg));
        }
    }
    let extra = rng.gen_range(usize::from(index == 0)..=max_extra.max(1));
    for _ in 0..extra {
        let lambda = scalar(rng, 5, cfg, true);
        blocks.push(jordan_block(rng.gen_range(1..=2), &lambda, cfg));
    }
    blocks.shuffle(rng);
    blocks
        .iter()
        .fold(ExactMatrix::zeros(0, 0, cfg), |acc, b| ExactMatrix::block_diagonal(&acc, b))
}

/// Unit lower times unit upper triangular: invertible with small entries.
pub fn unimodular<R: Rng>(rng: &mut R, n: usize, cfg: FieldConfig) -> ExactMatrix {
    let lower = ExactMatrix::from_fn(n, n, cfg, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Greater if rng.gen_bool(0.5) => Scalar::from(rng.gen_range(-2..=2)),
        _ => Scalar::zero(),
    });
    let upper = ExactMatrix::from_fn(n, n, cfg, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Less if rng.gen_bool(0.5) => Scalar::from(rng.gen_range(-2..=2)),
        _ => Scalar::zero(),
    });
    &lower * &upper
}

/// Square matrix of size `n` with varied rank and Drazin index: either a
/// low-rank product, a sparse matrix, or a Jordan sum under a random
/// similarity.
pub fn mixed_square<R: Rng>(rng: &mut R, n: usize, cfg: FieldConfig) -> ExactMatrix {
    match rng.gen_range(0..3) {
        0 => {
            let r = rng.gen_range(0..=n);
            let left = ExactMatrix::from_fn(n, r, cfg, |_, _| scalar(rng, 4, cfg, false));
            let right = ExactMatrix::from_fn(r, n, cfg, |_, _| scalar(rng, 4, cfg, false));
            &left * &right
        }
        1 => sparse_matrix(rng, n, 0.35, 5, cfg),
        _ => {
            let index = rng.gen_range(0..=n.min(3));
            let mut blocks = Vec::new();
            let mut size = 0;
            if index > 0 {
                blocks.push(jordan_nilpotent(index, cfg));
                size = index;
            }
            while size < n {
                let k = rng.gen_range(1..=(n - size).min(2));
                if index > 0 && rng.gen_bool(0.3) {
                    let k = k.min(index);
                    blocks.push(jordan_nilpotent(k, cfg));
                    size += k;
                } else {
                    let lambda = scalar(rng, 5, cfg, true);
                    blocks.push(jordan_block(k, &lambda, cfg));
                    size += k;
                }
            }
            blocks.shuffle(rng);
            let j = blocks
                .iter()
                .fold(ExactMatrix::zeros(0, 0, cfg), |acc, b| ExactMatrix::block_diagonal(&acc, b));
            let s = unimodular(rng, n, cfg);
            let s_inv = s.inverse().expect("unimodular matrices are invertible");
            &(&s * &j) * &s_inv
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_are_hit() {
        let bounds = Bounds::default();
        for (k, target) in CaseTag::ALL.into_iter().enumerate() {
            for seed in 0..5 {
                let spec = random_spec(seed * 10 + k as u64, &bounds, target).unwrap();
                assert_eq!(classify_double_star(&spec).unwrap().tag, target);
            }
        }
    }

    #[test]
    fn forced_dot_products() {
        let spec = random_spec(1, &Bounds::default(), CaseTag::BothZero).unwrap();
        assert!(spec.xy().is_zero() && spec.zw().is_zero());
        let spec = random_spec(1, &Bounds::default(), CaseTag::NilpotentCase).unwrap();
        assert_eq!(spec.xy(), -&spec.ab());
    }

    #[test]
    fn same_seed_same_spec() {
        let bounds = Bounds {
            cfg: FieldConfig::GAUSSIAN_CONJUGATION,
            ..Bounds::default()
        };
        assert_eq!(
            random_spec(42, &bounds, CaseTag::Mirrored).unwrap(),
            random_spec(42, &bounds, CaseTag::Mirrored).unwrap()
        );
    }

    #[test]
    fn unreachable_bounds() {
        let bounds = Bounds {
            max_m: 1,
            ..Bounds::default()
        };
        assert!(matches!(
            random_spec(0, &bounds, CaseTag::BothZero),
            Err(Error::UnreachableCase(_))
        ));
    }

    #[test]
    fn jordan_sums_have_the_requested_index() {
        let mut rng = rng_for(3, 0);
        for index in 0..=3 {
            let a = jordan_sum_with_index(&mut rng, index, 2, FieldConfig::RATIONALS);
            assert_eq!(a.rank_stabilization_index().unwrap(), index);
        }
    }
}
