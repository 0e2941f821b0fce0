//! Matrices of double star and D-linked stars digraphs.
//!
//! Vertex order for a double star is: first centre, its `m` leaves, second
//! centre, its `n` leaves. A D-linked stars matrix is `[[A, B], [C, 0]]`
//! with `B = diag(x_1ᵀ, …, x_nᵀ)` and `C = diag(y_1, …, y_n)`.

use crate::error::{Error, Result};
use crate::field::{FieldConfig, Scalar};
use crate::matrix::ExactMatrix;

/// Plain dot product `uᵀv`, no involution.
pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// `Σ u_i · ū_i` under the configured involution.
pub fn gram(u: &[Scalar], cfg: FieldConfig) -> Scalar {
    u.iter().map(|a| a * &cfg.involute(a)).sum()
}

fn check_vector(name: &str, v: &[Scalar], cfg: FieldConfig) -> Result<()> {
    if v.is_empty() {
        return Err(Error::spec(name, "must have at least one entry"));
    }
    for (i, e) in v.iter().enumerate() {
        if e.is_zero() {
            return Err(Error::spec(name, format!("entry {i} is zero")));
        }
        cfg.check(e).map_err(|e| Error::spec(name, e.to_string()))?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleStarSpec {
    pub a: Scalar,
    pub b: Scalar,
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
    pub z: Vec<Scalar>,
    pub w: Vec<Scalar>,
    pub cfg: FieldConfig,
}

impl DoubleStarSpec {
    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn order(&self) -> usize {
        self.m() + self.n() + 2
    }

    pub fn validate(&self) -> Result<()> {
        for (name, s) in [("a", &self.a), ("b", &self.b)] {
            if s.is_zero() {
                return Err(Error::spec(name, "must be nonzero"));
            }
            self.cfg.check(s).map_err(|e| Error::spec(name, e.to_string()))?;
        }
        check_vector("x", &self.x, self.cfg)?;
        check_vector("y", &self.y, self.cfg)?;
        check_vector("z", &self.z, self.cfg)?;
        check_vector("w", &self.w, self.cfg)?;
        if self.x.len() != self.y.len() {
            return Err(Error::spec("y", "length must match x"));
        }
        if self.z.len() != self.w.len() {
            return Err(Error::spec("w", "length must match z"));
        }
        Ok(())
    }

    /// `xᵀy`
    pub fn xy(&self) -> Scalar {
        dot(&self.x, &self.y)
    }

    /// `zᵀw`
    pub fn zw(&self) -> Scalar {
        dot(&self.z, &self.w)
    }

    pub fn ab(&self) -> Scalar {
        &self.a * &self.b
    }
}

/// The double star matrix
///
/// ```text
/// [ 0  xᵀ a  0  ]
/// [ y  0  0  0  ]
/// [ b  0  0  zᵀ ]
/// [ 0  0  w  0  ]
/// ```
pub fn build_double_star(spec: &DoubleStarSpec) -> Result<ExactMatrix> {
    spec.validate()?;
    let (m, n) = (spec.m(), spec.n());
    let c2 = m + 1;
    let mut out = ExactMatrix::zeros(spec.order(), spec.order(), spec.cfg);
    for i in 0..m {
        out.set(0, 1 + i, spec.x[i].clone());
        out.set(1 + i, 0, spec.y[i].clone());
    }
    out.set(0, c2, spec.a.clone());
    out.set(c2, 0, spec.b.clone());
    for j in 0..n {
        out.set(c2, c2 + 1 + j, spec.z[j].clone());
        out.set(c2 + 1 + j, c2, spec.w[j].clone());
    }
    Ok(out)
}

/// Exchange the two stars: `(a, b, x, y, z, w) ↦ (b, a, z, w, x, y)`.
///
/// The returned permutation `P` satisfies
/// `build(swapped) = P · build(spec) · Pᵀ`.
pub fn swap_stars(spec: &DoubleStarSpec) -> (DoubleStarSpec, ExactMatrix) {
    let swapped = DoubleStarSpec {
        a: spec.b.clone(),
        b: spec.a.clone(),
        x: spec.z.clone(),
        y: spec.w.clone(),
        z: spec.x.clone(),
        w: spec.y.clone(),
        cfg: spec.cfg,
    };
    let (m, n) = (spec.m(), spec.n());
    let order = spec.order();
    // New position i holds old vertex source[i].
    let source: Vec<usize> = (m + 1..order).chain(0..m + 1).collect();
    debug_assert_eq!(source.len(), n + m + 2);
    let mut p = ExactMatrix::zeros(order, order, spec.cfg);
    for (i, &s) in source.iter().enumerate() {
        p.set(i, s, Scalar::one());
    }
    (swapped, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DLinkedSpec {
    pub base: ExactMatrix,
    pub stars: Vec<Star>,
}

impl DLinkedSpec {
    pub fn cfg(&self) -> FieldConfig {
        self.base.cfg()
    }

    pub fn validate(&self) -> Result<()> {
        self.base
            .require_square()
            .map_err(|e| Error::spec("A", e.to_string()))?;
        if self.stars.len() != self.base.rows() {
            return Err(Error::spec(
                "stars",
                format!("expected {} stars, got {}", self.base.rows(), self.stars.len()),
            ));
        }
        for (i, star) in self.stars.iter().enumerate() {
            check_vector(&format!("stars[{i}].x"), &star.x, self.cfg())?;
            check_vector(&format!("stars[{i}].y"), &star.y, self.cfg())?;
            if star.x.len() != star.y.len() {
                return Err(Error::spec(
                    format!("stars[{i}].y"),
                    "length must match x",
                ));
            }
        }
        Ok(())
    }

    /// `x_iᵀ y_i` per star.
    pub fn pairings(&self) -> Vec<Scalar> {
        self.stars.iter().map(|s| dot(&s.x, &s.y)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DLinkedMatrices {
    pub m: ExactMatrix,
    pub b: ExactMatrix,
    pub c: ExactMatrix,
}

pub fn build_d_linked(spec: &DLinkedSpec) -> Result<DLinkedMatrices> {
    spec.validate()?;
    let n = spec.base.rows();
    let cfg = spec.cfg();
    let total: usize = spec.stars.iter().map(|s| s.x.len()).sum();
    let mut b = ExactMatrix::zeros(n, total, cfg);
    let mut c = ExactMatrix::zeros(total, n, cfg);
    let mut offset = 0;
    for (i, star) in spec.stars.iter().enumerate() {
        for (j, (x, y)) in star.x.iter().zip(&star.y).enumerate() {
            b.set(i, offset + j, x.clone());
            c.set(offset + j, i, y.clone());
        }
        offset += star.x.len();
    }
    let zero = ExactMatrix::zeros(total, total, cfg);
    let m = ExactMatrix::block(&[&[&spec.base, &b], &[&c, &zero]])?;
    Ok(DLinkedMatrices { m, b, c })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
}

impl Digraph {
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v).count()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }
}

/// Arc `(i, j)` for every nonzero `a_ij`, weighted by the entry.
pub fn digraph_of(a: &ExactMatrix) -> Result<Digraph> {
    a.require_square()?;
    let mut edges = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let w = a.get(i, j);
            if !w.is_zero() {
                edges.push(Edge {
                    from: i,
                    to: j,
                    weight: w.clone(),
                });
            }
        }
    }
    Ok(Digraph {
        vertex_count: a.rows(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    fn double_star(a: i64, b: i64, x: &[i64], y: &[i64], z: &[i64], w: &[i64]) -> DoubleStarSpec {
        DoubleStarSpec {
            a: a.into(),
            b: b.into(),
            x: ints(x),
            y: ints(y),
            z: ints(z),
            w: ints(w),
            cfg: FieldConfig::RATIONALS,
        }
    }

    #[test]
    fn smallest_double_star() {
        let m = build_double_star(&double_star(1, 1, &[1], &[1], &[1], &[1])).unwrap();
        assert_eq!(
            m,
            ExactMatrix::from_ints(&[[0, 1, 1, 0], [1, 0, 0, 0], [1, 0, 0, 1], [0, 0, 1, 0]])
        );
    }

    #[test]
    fn double_star_arc_count_and_centres() {
        let spec = double_star(2, -3, &[1, 2, 3], &[4, 5, 6], &[1, -1], &[2, 7]);
        let m = build_double_star(&spec).unwrap();
        let g = digraph_of(&m).unwrap();
        assert_eq!(g.edges.len(), 2 * (3 + 2) + 2);
        let hubs: Vec<usize> = (0..g.vertex_count).filter(|&v| g.out_degree(v) >= 2).collect();
        assert_eq!(hubs, vec![0, 4]);
        assert!(g.has_edge(0, 4) && g.has_edge(4, 0));
    }

    #[test]
    fn zero_entries_are_rejected() {
        let spec = double_star(1, 1, &[1, 0], &[1, 1], &[1], &[1]);
        match build_double_star(&spec) {
            Err(Error::SpecViolation { field, .. }) => assert_eq!(field, "x"),
            other => panic!("expected spec violation, got {other:?}"),
        }
        let spec = double_star(0, 1, &[1], &[1], &[1], &[1]);
        assert!(matches!(build_double_star(&spec), Err(Error::SpecViolation { .. })));
    }

    #[test]
    fn swap_is_a_permutation_similarity() {
        let spec = double_star(2, 3, &[1], &[1], &[1], &[1]);
        let (swapped, p) = swap_stars(&spec);
        assert_eq!((swapped.a.clone(), swapped.b.clone()), (Scalar::from(3), Scalar::from(2)));
        let m = build_double_star(&spec).unwrap();
        let m2 = build_double_star(&swapped).unwrap();
        assert_eq!(m2, &(&p * &m) * &p.transpose());
        assert!((&p * &p.transpose()).is_identity());
        assert_eq!(swap_stars(&swapped).0, spec);
    }

    #[test]
    fn digraph_examples() {
        let z = ExactMatrix::zeros(3, 3, FieldConfig::RATIONALS);
        assert!(digraph_of(&z).unwrap().edges.is_empty());
        let id = ExactMatrix::identity(2, FieldConfig::RATIONALS);
        let g = digraph_of(&id).unwrap();
        assert_eq!(g.edges.len(), 2);
        assert!(g.has_edge(0, 0) && g.has_edge(1, 1));
    }

    #[test]
    fn d_linked_examples() {
        let spec = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[0]]),
            stars: vec![Star { x: ints(&[1]), y: ints(&[1]) }],
        };
        assert_eq!(build_d_linked(&spec).unwrap().m, ExactMatrix::from_ints(&[[0, 1], [1, 0]]));

        let spec = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[0, 1], [1, 0]]),
            stars: vec![
                Star { x: ints(&[1]), y: ints(&[1]) },
                Star { x: ints(&[1]), y: ints(&[1]) },
            ],
        };
        assert_eq!(
            build_d_linked(&spec).unwrap().m,
            ExactMatrix::from_ints(&[[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
        );
    }

    #[test]
    fn d_linked_bc_is_diagonal_of_pairings() {
        let spec = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[1, 2, 0], [0, 0, 1], [3, 0, 0]]),
            stars: vec![
                Star { x: ints(&[1, 2]), y: ints(&[3, -1]) },
                Star { x: ints(&[4]), y: ints(&[5]) },
                Star { x: ints(&[1, 1, 1]), y: ints(&[1, -1, 2]) },
            ],
        };
        let mats = build_d_linked(&spec).unwrap();
        assert_eq!(&mats.b * &mats.c, ExactMatrix::diagonal(&spec.pairings(), spec.cfg()));
        assert_eq!((mats.b.rank(), mats.c.rank()), (3, 3));
    }

    #[test]
    fn d_linked_star_count_must_match() {
        let spec = DLinkedSpec {
            base: ExactMatrix::from_ints(&[[0, 1], [1, 0]]),
            stars: vec![Star { x: ints(&[1]), y: ints(&[1]) }],
        };
        assert!(matches!(build_d_linked(&spec), Err(Error::SpecViolation { .. })));
    }
}
