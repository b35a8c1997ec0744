//! Derivations of the quandle algebra: linear maps `D` with
//! `D(a·b) = D(a)·b + a·D(b)`.
//!
//! The `n²` unknowns `c_x^u` are ordered row-major over the matrix
//! convention of [`crate::qalgebra`]: unknown `u*n + x` is entry `(u, x)`.

mod dihedral;

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::exactla::{Echelon, FieldSpec, Matrix, Scalar, SubspaceBasis};
use crate::qalgebra::{AlgebraError, LinearMap};
use crate::quandle::{Group, Quandle};

pub use dihedral::{
    block_decomposition, dihedral_symmetry_report, predicted_dim_dihedral, BlockReport, DimPrediction,
    PredictionSource, RelationResult, RelationStatus, SymmetryRelation, SymmetryReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DerivationError {
    #[error("map has order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("block decomposition needs an even order, got {0}")]
    OddOrder(usize),
    #[error("element {x} is not central")]
    NotCentral { x: usize },
    #[error("element {x} out of range 0..{n}")]
    OutOfRange { x: usize, n: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Sparse integer form of the Leibniz equation for the triple `(x, y, z)`:
/// the coefficient of `e_z` in `D(e_{x⊳y}) - D(e_x)·e_y - e_x·D(e_y)`.
pub fn leibniz_row(q: &Quandle, x: usize, y: usize, z: usize) -> Vec<(usize, i64)> {
    let n = q.order();
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    *acc.entry(z * n + q.op(x, y)).or_default() += 1;
    *acc.entry(q.right_divide(z, y) * n + x).or_default() -= 1;
    for w in q.left_preimage(x, z) {
        *acc.entry(w * n + y).or_default() -= 1;
    }
    acc.into_iter().filter(|&(_, v)| v != 0).collect()
}

/// The full `n³ × n²` Leibniz system, row `(x*n + y)*n + z`.
pub fn leibniz_system(q: &Quandle, f: FieldSpec) -> Matrix {
    let n = q.order();
    let mut m = Matrix::zeros(f, n * n * n, n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let r = (x * n + y) * n + z;
                for (c, v) in leibniz_row(q, x, y, z) {
                    m.set(r, c, f.from_i64(v));
                }
            }
        }
    }
    m
}

/// A canonical basis of `Der(k[X])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBasis {
    quandle: Quandle,
    field: FieldSpec,
    span: SubspaceBasis,
    basis: Vec<LinearMap>,
}

impl DerivationBasis {
    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    /// The derivation space as row-major flattened matrices.
    pub fn span(&self) -> &SubspaceBasis {
        &self.span
    }

    pub fn contains(&self, d: &LinearMap) -> bool {
        d.order() == self.quandle.order()
            && d.field() == self.field
            && self
                .span
                .contains(&d.flatten_row_major())
                .expect("flattened length n²")
                .is_some()
    }

    /// Whether every commutator of basis elements lies back in the span.
    pub fn is_lie_closed(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            self.basis[i + 1..]
                .iter()
                .all(|b| self.contains(&a.commutator(b).expect("same order")))
        })
    }
}

/// Nullspace of the Leibniz system, streamed row by row into a sparse
/// echelon so the dense system is never materialised.
pub fn derivation_space(q: &Quandle, f: FieldSpec) -> DerivationBasis {
    let n = q.order();
    let mut ech = Echelon::new(f, n * n);
    let mut seen: HashSet<Vec<(usize, i64)>> = HashSet::new();
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if ech.rank() == n * n {
                    break 'outer;
                }
                let row = leibniz_row(q, x, y, z);
                if row.is_empty() || !seen.insert(row.clone()) {
                    continue;
                }
                let sparse: Vec<(usize, Scalar)> = row
                    .into_iter()
                    .map(|(c, v)| (c, f.from_i64(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                ech.insert_sparse(sparse).expect("columns in range");
            }
        }
    }
    let span = crate::exactla::kernel_of(&ech);
    let basis = span
        .vectors()
        .iter()
        .map(|v| LinearMap::from_row_major(f, n, v).expect("length n²"))
        .collect();
    DerivationBasis {
        quandle: q.clone(),
        field: f,
        span,
        basis,
    }
}

fn check_order(d: &LinearMap, n: usize) -> Result<(), DerivationError> {
    if d.order() != n {
        return Err(DerivationError::OrderMismatch {
            expected: n,
            found: d.order(),
        });
    }
    Ok(())
}

/// Outcome of checking the structure-constant relations; `witness` is the
/// lexicographically first failing `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize, usize)>,
}

/// Checks `c_{x⊳y}^z = c_x^ẑ + Σ_{w : x⊳w = z} c_y^w` for all `x, y, z`,
/// where `ẑ` is the unique element with `ẑ⊳y = z`.
pub fn verify_structure_relations(d: &LinearMap, q: &Quandle) -> Result<StructureCheck, DerivationError> {
    let n = q.order();
    check_order(d, n)?;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = d.coeff(q.op(x, y), z);
                let mut rhs = d.coeff(x, q.right_divide(z, y)).clone();
                for w in q.left_preimage(x, z) {
                    rhs = &rhs + d.coeff(y, w);
                }
                if *lhs != rhs {
                    return Ok(StructureCheck {
                        holds: false,
                        witness: Some((x, y, z)),
                    });
                }
            }
        }
    }
    Ok(StructureCheck {
        holds: true,
        witness: None,
    })
}

/// `D_x(e_y) = e_y - e_{yx}` for a central element `x` of `g`.
pub fn central_translation(g: &Group, x: usize, f: FieldSpec) -> Result<LinearMap, DerivationError> {
    let n = g.order();
    if x >= n {
        return Err(DerivationError::OutOfRange { x, n });
    }
    if !g.is_central(x) {
        return Err(DerivationError::NotCentral { x });
    }
    let mut m = Matrix::identity(f, n);
    for y in 0..n {
        let yx = g.mul(y, x);
        m.set(yx, y, m.get(yx, y) - &f.one());
    }
    Ok(LinearMap::new(m)?)
}

/// Whether every column of `D` sums to zero, i.e. `D(A) ⊆ I_X`.
pub fn image_in_augmentation_ideal(d: &LinearMap) -> bool {
    let f = d.field();
    (0..d.order()).all(|x| d.matrix().column(x).iter().fold(f.zero(), |acc, c| acc + c).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{multiply, AlgebraElement};
    use crate::quandle::{catalog, catalog_entry};
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    /// Independent Leibniz check through the algebra product.
    fn leibniz_holds(d: &LinearMap, qd: &Quandle) -> bool {
        let n = qd.order();
        let f = d.field();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let ex = AlgebraElement::basis(f, n, x).unwrap();
                let ey = AlgebraElement::basis(f, n, y).unwrap();
                let lhs = d.apply(&multiply(&ex, &ey, qd).unwrap()).unwrap();
                let r1 = multiply(&d.apply(&ex).unwrap(), &ey, qd).unwrap();
                let r2 = multiply(&ex, &d.apply(&ey).unwrap(), qd).unwrap();
                lhs == r1.add(&r2).unwrap()
            })
        })
    }

    /// Counts GF(2) matrices satisfying Leibniz by enumerating all of them.
    fn brute_force_gf2(qd: &Quandle) -> usize {
        let n = qd.order();
        let f = gf(2);
        (0u64..1 << (n * n))
            .filter(|bits| {
                let v: Vec<Scalar> = (0..n * n).map(|i| f.from_i64(((bits >> i) & 1) as i64)).collect();
                leibniz_holds(&LinearMap::from_row_major(f, n, &v).unwrap(), qd)
            })
            .count()
    }

    #[test]
    fn system_shape_and_degenerate_order() {
        let d3 = Quandle::dihedral(3).unwrap();
        let m = leibniz_system(&d3, q());
        assert_eq!((m.rows(), m.cols()), (27, 9));
        let one = Quandle::trivial(1).unwrap();
        assert_eq!(leibniz_row(&one, 0, 0, 0), vec![(0, -1)]);
        for f in [q(), gf(2), gf(3)] {
            assert_eq!(derivation_space(&one, f).dim(), 0);
        }
    }

    #[test]
    fn trivial_system_is_column_sums() {
        for n in 1..5 {
            let t = Quandle::trivial(n).unwrap();
            let sys = crate::exactla::nullspace(&leibniz_system(&t, q()));
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|x| (0..n * n).map(|i| q().from_i64((i % n == x) as i64)).collect())
                .collect();
            let expected = crate::exactla::nullspace(&Matrix::from_rows(q(), cols).unwrap());
            assert_eq!(sys, expected);
            assert_eq!(derivation_space(&t, q()).span(), &expected);
        }
    }

    #[test]
    fn streamed_solver_matches_dense_nullspace() {
        for order in [3, 4] {
            for entry in catalog(order).unwrap() {
                for f in [q(), gf(2), gf(3)] {
                    let dense = crate::exactla::nullspace(&leibniz_system(&entry.quandle, f));
                    assert_eq!(derivation_space(&entry.quandle, f).span(), &dense, "{}", entry.label);
                }
            }
        }
    }

    #[test]
    fn small_dimensions() {
        let d3 = Quandle::dihedral(3).unwrap();
        assert_eq!(derivation_space(&d3, q()).dim(), 0);
        assert_eq!(derivation_space(&d3, gf(3)).dim(), 2);
        assert_eq!(derivation_space(&Quandle::trivial(3).unwrap(), q()).dim(), 6);
        let c47 = catalog_entry("4.7").unwrap().quandle;
        assert_eq!(derivation_space(&c47, q()).dim(), 0);
    }

    #[test]
    fn basis_elements_are_derivations() {
        for order in [3, 4] {
            for entry in catalog(order).unwrap() {
                for f in [q(), gf(2), gf(3)] {
                    let ds = derivation_space(&entry.quandle, f);
                    for d in ds.basis() {
                        assert!(leibniz_holds(d, &entry.quandle));
                        assert!(verify_structure_relations(d, &entry.quandle).unwrap().holds);
                    }
                    assert!(ds.is_lie_closed(), "{} over {f}", entry.label);
                }
            }
        }
    }

    #[test]
    fn gf2_brute_force_agrees() {
        for entry in catalog(3).unwrap() {
            let dim = derivation_space(&entry.quandle, gf(2)).dim();
            assert_eq!(brute_force_gf2(&entry.quandle), 1 << dim, "{}", entry.label);
        }
    }

    #[test]
    fn structure_relations_report_first_failure() {
        let d4 = Quandle::dihedral(4).unwrap();
        assert!(verify_structure_relations(&LinearMap::zero(q(), 4), &d4).unwrap().holds);
        let id = LinearMap::identity(q(), 4);
        let check = verify_structure_relations(&id, &d4).unwrap();
        assert!(!check.holds);
        // x=y=z=0: c_0^0 = 1 on the left, 1 + 1 on the right.
        assert_eq!(check.witness, Some((0, 0, 0)));
        assert!(matches!(
            verify_structure_relations(&LinearMap::zero(q(), 3), &d4),
            Err(DerivationError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn central_translations() {
        let z2 = Group::cyclic(2).unwrap();
        let d = central_translation(&z2, 1, q()).unwrap();
        assert_eq!(d.matrix(), &Matrix::from_i64_rows(q(), &[[1, -1], [-1, 1]]).unwrap());
        assert!(central_translation(&z2, 0, q()).unwrap().is_zero());
        let s3 = crate::quandle::symmetric_group_s3();
        assert_eq!(
            central_translation(&s3, 1, q()),
            Err(DerivationError::NotCentral { x: 1 })
        );
        assert!(central_translation(&z2, 2, q()).is_err());
        for n in 1..6 {
            let g = Group::cyclic(n).unwrap();
            let cq = Quandle::conjugation_of(&g);
            for x in 0..n {
                let d = central_translation(&g, x, q()).unwrap();
                assert!(verify_structure_relations(&d, &cq).unwrap().holds);
                assert!(image_in_augmentation_ideal(&d));
            }
        }
    }

    #[test]
    fn central_translation_composition() {
        let g = Group::cyclic(4).unwrap();
        let d = |x| central_translation(&g, x, q()).unwrap();
        let lhs = d(2).compose(&d(2)).unwrap();
        let rhs = d(2).add(&d(2)).unwrap().sub(&d(g.mul(2, 2))).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn augmentation_image() {
        assert!(image_in_augmentation_ideal(&LinearMap::zero(q(), 3)));
        assert!(!image_in_augmentation_ideal(&LinearMap::identity(q(), 3)));
        for n in 1..5 {
            for d in derivation_space(&Quandle::trivial(n).unwrap(), q()).basis() {
                assert!(image_in_augmentation_ideal(d));
            }
        }
    }

    fn random_map(n: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(-2i64..=2, n * n).prop_map(move |c| {
            let v: Vec<Scalar> = c.into_iter().map(|a| q().from_i64(a)).collect();
            LinearMap::from_row_major(q(), n, &v).unwrap()
        })
    }

    fn in_span(n: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
        (0usize..7, proptest::collection::vec(-3i64..=3, n * n))
    }

    proptest! {
        #[test]
        fn relations_match_membership_random(idx in 0usize..7, d in random_map(4)) {
            let qd = &catalog(4).unwrap()[idx].quandle;
            let ds = derivation_space(qd, q());
            let check = verify_structure_relations(&d, qd).unwrap();
            prop_assert_eq!(check.holds, ds.contains(&d));
            prop_assert_eq!(check.holds, leibniz_holds(&d, qd));
        }

        #[test]
        fn relations_match_membership_in_span((idx, coeffs) in in_span(4)) {
            let qd = &catalog(4).unwrap()[idx].quandle;
            let ds = derivation_space(qd, q());
            let mut d = LinearMap::zero(q(), 4);
            for (b, c) in ds.basis().iter().zip(&coeffs) {
                d = d.add(&b.scale(&q().from_i64(*c))).unwrap();
            }
            prop_assert!(ds.contains(&d));
            prop_assert!(verify_structure_relations(&d, qd).unwrap().holds);
        }
    }
}
