//! The quandle algebra `k[X]`: coefficient vectors over the basis `{e_x}` with
//! the bilinear product `e_x · e_y = e_{x⊳y}`, the augmentation map, the
//! ideals `I_X` and `J_X`, and multiplication operators as matrices.
//!
//! Linear maps use the column convention: column `x` of the matrix holds the
//! coordinates of the image of `e_x`, so entry `(u, x)` is the structure
//! constant `c_x^u` in `D(e_x) = Σ_u c_x^u e_u`.

use thiserror::Error;

use crate::exactla::{Echelon, FieldSpec, LinAlgError, Matrix, Scalar, SubspaceBasis};
use crate::quandle::Quandle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("element index {index} out of range 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("linear map must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        AlgebraElement {
            field,
            coeffs: vec![field.zero(); n],
        }
    }

    /// The basis vector `e_x`.
    pub fn basis(field: FieldSpec, n: usize, x: usize) -> Result<Self, AlgebraError> {
        if x >= n {
            return Err(AlgebraError::IndexOutOfRange { index: x, n });
        }
        let mut e = AlgebraElement::zero(field, n);
        e.coeffs[x] = field.one();
        Ok(e)
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(AlgebraError::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        Ok(AlgebraElement { field, coeffs })
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        AlgebraElement {
            field,
            coeffs: coeffs.iter().map(|&c| field.from_i64(c)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.len() != other.len() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(other)?;
        Ok(AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(other)?;
        Ok(AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }
}

/// `a · b = Σ_{x,y} a_x b_y e_{x⊳y}`.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement, q: &Quandle) -> Result<AlgebraElement, AlgebraError> {
    a.check_compatible(b)?;
    let n = q.order();
    if a.len() != n {
        return Err(AlgebraError::LengthMismatch {
            expected: n,
            found: a.len(),
        });
    }
    let mut out = AlgebraElement::zero(a.field, n);
    for (x, ax) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (y, by) in b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let z = q.op(x, y);
            out.coeffs[z] = &out.coeffs[z] + &(ax * by);
        }
    }
    Ok(out)
}

/// The augmentation `ε(Σ a_x e_x) = Σ a_x`.
pub fn augmentation(a: &AlgebraElement) -> Scalar {
    a.coeffs.iter().fold(a.field.zero(), |acc, c| acc + c)
}

/// Canonical basis of the augmentation ideal `I_X = ker ε`.
pub fn augmentation_ideal(q: &Quandle, field: FieldSpec) -> SubspaceBasis {
    let n = q.order();
    let ones = Matrix::from_fn(field, 1, n, |_, _| field.one());
    crate::exactla::nullspace(&ones)
}

/// The smallest right ideal containing every `e_{x⊳y} - e_{y⊳x}`.
///
/// Seeds the span with the generators and closes it under right
/// multiplication by each basis vector `e_z` until the dimension stops
/// growing. For medial quandles the result is also checked to be a left ideal.
pub fn jx_ideal(q: &Quandle, field: FieldSpec) -> SubspaceBasis {
    let n = q.order();
    let mut span = Echelon::new(field, n);
    let mut accepted: Vec<Vec<Scalar>> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let mut v = vec![field.zero(); n];
            v[q.op(x, y)] = &v[q.op(x, y)] + &field.one();
            v[q.op(y, x)] = &v[q.op(y, x)] - &field.one();
            if span.insert_dense(&v).expect("length n") {
                accepted.push(v);
            }
        }
    }
    let mut i = 0;
    while i < accepted.len() {
        let v = AlgebraElement {
            field,
            coeffs: accepted[i].clone(),
        };
        for z in 0..n {
            let ez = AlgebraElement::basis(field, n, z).expect("z < n");
            let w = multiply(&v, &ez, q).expect("compatible").into_coeffs();
            if span.insert_dense(&w).expect("length n") {
                accepted.push(w);
            }
        }
        i += 1;
    }
    let ideal = SubspaceBasis::from_vectors(field, n, accepted).expect("length n");
    if q.props().medial {
        assert!(
            is_left_ideal(&ideal, q),
            "J_X of a medial quandle must be a two-sided ideal"
        );
    }
    ideal
}

fn closed_under(sub: &SubspaceBasis, q: &Quandle, on_right: bool) -> bool {
    let n = q.order();
    let field = sub.field();
    sub.vectors().iter().all(|v| {
        let v = AlgebraElement {
            field,
            coeffs: v.clone(),
        };
        (0..n).all(|z| {
            let ez = AlgebraElement::basis(field, n, z).expect("z < n");
            let w = if on_right {
                multiply(&v, &ez, q)
            } else {
                multiply(&ez, &v, q)
            }
            .expect("compatible");
            sub.contains(w.coeffs()).expect("length n").is_some()
        })
    })
}

/// `S · e_z ⊆ S` for every `z`.
pub fn is_right_ideal(sub: &SubspaceBasis, q: &Quandle) -> bool {
    closed_under(sub, q, true)
}

/// `e_z · S ⊆ S` for every `z`.
pub fn is_left_ideal(sub: &SubspaceBasis, q: &Quandle) -> bool {
    closed_under(sub, q, false)
}

/// A square matrix acting on coefficient vectors by matrix–column-vector
/// product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self, AlgebraError> {
        if !matrix.is_square() {
            return Err(AlgebraError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(field, n, n),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(field, n),
        }
    }

    /// The map sending `e_x` to the basis vector `e_{image(x)}`.
    pub fn from_basis_images(field: FieldSpec, n: usize, image: impl Fn(usize) -> usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for x in 0..n {
            m.set(image(x), x, field.one());
        }
        LinearMap { matrix: m }
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `c_x^u`: coefficient of `e_u` in the image of `e_x`.
    pub fn coeff(&self, x: usize, u: usize) -> &Scalar {
        self.matrix.get(u, x)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if a.field != self.field() {
            return Err(AlgebraError::FieldMismatch {
                left: self.field(),
                right: a.field,
            });
        }
        Ok(AlgebraElement {
            field: a.field,
            coeffs: self.matrix.mul_vec(&a.coeffs)?,
        })
    }

    /// The image of the basis vector `e_x`.
    pub fn image_of_basis(&self, x: usize) -> AlgebraElement {
        AlgebraElement {
            field: self.field(),
            coeffs: self.matrix.column(x),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        Ok(LinearMap {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        Ok(LinearMap {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        Ok(LinearMap {
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    pub fn scale(&self, k: &Scalar) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scale(k),
        }
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Entry `c_x^u` at index `u*n + x` (the derivation unknown ordering).
    pub fn flatten_row_major(&self) -> Vec<Scalar> {
        self.matrix.entries().to_vec()
    }

    /// Entry `c_x^u` at index `x*n + u` (the operator-space ordering).
    pub fn flatten_col_major(&self) -> Vec<Scalar> {
        self.matrix.transpose().entries().to_vec()
    }

    pub fn from_row_major(field: FieldSpec, n: usize, v: &[Scalar]) -> Result<Self, AlgebraError> {
        if v.len() != n * n {
            return Err(AlgebraError::LengthMismatch {
                expected: n * n,
                found: v.len(),
            });
        }
        Ok(LinearMap {
            matrix: Matrix::from_fn(field, n, n, |u, x| v[u * n + x].clone()),
        })
    }

    pub fn from_col_major(field: FieldSpec, n: usize, v: &[Scalar]) -> Result<Self, AlgebraError> {
        if v.len() != n * n {
            return Err(AlgebraError::LengthMismatch {
                expected: n * n,
                found: v.len(),
            });
        }
        Ok(LinearMap {
            matrix: Matrix::from_fn(field, n, n, |u, x| v[x * n + u].clone()),
        })
    }

    /// `P ∘ self ∘ P⁻¹` for the permutation matrix `P: e_x ↦ e_{perm[x]}`.
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> Result<LinearMap, AlgebraError> {
        let n = self.order();
        if perm.len() != n {
            return Err(AlgebraError::LengthMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        let mut m = Matrix::zeros(self.field(), n, n);
        for u in 0..n {
            for x in 0..n {
                m.set(perm[u], perm[x], self.matrix.get(u, x).clone());
            }
        }
        Ok(LinearMap { matrix: m })
    }
}

/// `L_x : e_y ↦ e_{x⊳y}`.
pub fn left_mult(x: usize, q: &Quandle, field: FieldSpec) -> Result<LinearMap, AlgebraError> {
    let n = q.order();
    if x >= n {
        return Err(AlgebraError::IndexOutOfRange { index: x, n });
    }
    Ok(LinearMap::from_basis_images(field, n, |y| q.op(x, y)))
}

/// `R_x : e_y ↦ e_{y⊳x}`; always a permutation matrix.
pub fn right_mult(x: usize, q: &Quandle, field: FieldSpec) -> Result<LinearMap, AlgebraError> {
    let n = q.order();
    if x >= n {
        return Err(AlgebraError::IndexOutOfRange { index: x, n });
    }
    Ok(LinearMap::from_basis_images(field, n, |y| q.op(y, x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{catalog, Quandle};
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn e(n: usize, x: usize) -> AlgebraElement {
        AlgebraElement::basis(q(), n, x).unwrap()
    }

    #[test]
    fn trivial_product_keeps_left_factor() {
        let t = Quandle::trivial(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(multiply(&e(4, x), &e(4, y), &t).unwrap(), e(4, x));
            }
        }
    }

    #[test]
    fn dihedral_products() {
        let d3 = Quandle::dihedral(3).unwrap();
        assert_eq!(multiply(&e(3, 0), &e(3, 1), &d3).unwrap(), e(3, 2));
        let a = e(3, 0).add(&e(3, 1)).unwrap();
        assert_eq!(multiply(&a, &e(3, 1), &d3).unwrap(), e(3, 2).add(&e(3, 1)).unwrap());
    }

    #[test]
    fn product_rejects_mismatches() {
        let d3 = Quandle::dihedral(3).unwrap();
        let gf2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            multiply(&e(3, 0), &AlgebraElement::basis(gf2, 3, 0).unwrap(), &d3),
            Err(AlgebraError::FieldMismatch { .. })
        ));
        assert!(matches!(
            multiply(&e(3, 0), &e(4, 0), &d3),
            Err(AlgebraError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn augmentation_values() {
        assert!(augmentation(&e(3, 1)).is_one());
        assert!(augmentation(&AlgebraElement::from_i64(q(), &[2, -1, 0])).is_one());
        assert!(augmentation(&e(3, 0).sub(&e(3, 2)).unwrap()).is_zero());
    }

    #[test]
    fn augmentation_ideal_shape() {
        for entry in catalog(4).unwrap() {
            let ideal = augmentation_ideal(&entry.quandle, q());
            assert_eq!(ideal.dim(), 3);
            assert!(ideal
                .contains(e(4, 1).sub(&e(4, 0)).unwrap().coeffs())
                .unwrap()
                .is_some());
            assert!(ideal.contains(e(4, 0).coeffs()).unwrap().is_none());
        }
    }

    #[test]
    fn jx_of_dihedral_three_is_zero() {
        assert!(jx_ideal(&Quandle::dihedral(3).unwrap(), q()).is_zero());
    }

    #[test]
    fn jx_of_trivial_is_augmentation_ideal() {
        for n in 1..6 {
            let t = Quandle::trivial(n).unwrap();
            assert_eq!(jx_ideal(&t, q()), augmentation_ideal(&t, q()));
        }
    }

    #[test]
    fn jx_is_right_ideal_inside_ix() {
        let gf3 = FieldSpec::prime(3).unwrap();
        for order in [3, 4] {
            for entry in catalog(order).unwrap() {
                for f in [q(), gf3] {
                    let jx = jx_ideal(&entry.quandle, f);
                    assert!(is_right_ideal(&jx, &entry.quandle), "{}", entry.label);
                    assert!(jx.is_subspace_of(&augmentation_ideal(&entry.quandle, f)).unwrap());
                    if entry.quandle.props().medial {
                        assert!(is_left_ideal(&jx, &entry.quandle), "{}", entry.label);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_operators() {
        let t3 = Quandle::trivial(3).unwrap();
        for x in 0..3 {
            assert_eq!(right_mult(x, &t3, q()).unwrap(), LinearMap::identity(q(), 3));
        }
        let l1 = left_mult(1, &t3, q()).unwrap();
        assert_eq!(l1.matrix().rank(), 1);
        for y in 0..3 {
            assert_eq!(l1.image_of_basis(y), e(3, 1));
        }
        let d3 = Quandle::dihedral(3).unwrap();
        let l0 = left_mult(0, &d3, q()).unwrap();
        assert_eq!(l0, LinearMap::from_basis_images(q(), 3, |y| [0, 2, 1][y]));
        assert!(left_mult(3, &d3, q()).is_err());
        assert!(right_mult(7, &d3, q()).is_err());
    }

    #[test]
    fn operators_reproduce_products() {
        for entry in catalog(4).unwrap() {
            let qd = &entry.quandle;
            for x in 0..4 {
                let l = left_mult(x, qd, q()).unwrap();
                let r = right_mult(x, qd, q()).unwrap();
                for y in 0..4 {
                    assert_eq!(l.image_of_basis(y), multiply(&e(4, x), &e(4, y), qd).unwrap());
                    assert_eq!(r.image_of_basis(y), multiply(&e(4, y), &e(4, x), qd).unwrap());
                }
                // R_x is a permutation matrix.
                let m = r.matrix();
                for c in 0..4 {
                    let col = m.column(c);
                    assert_eq!(col.iter().filter(|v| v.is_one()).count(), 1);
                    assert_eq!(col.iter().filter(|v| v.is_zero()).count(), 3);
                }
            }
        }
    }

    #[test]
    fn dihedral_three_algebra_is_not_associative() {
        let d3 = Quandle::dihedral(3).unwrap();
        let mut witnesses = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let lhs = multiply(&e(3, a), &multiply(&e(3, b), &e(3, c), &d3).unwrap(), &d3).unwrap();
                    let rhs = multiply(&multiply(&e(3, a), &e(3, b), &d3).unwrap(), &e(3, c), &d3).unwrap();
                    witnesses += (lhs != rhs) as usize;
                }
            }
        }
        assert!(witnesses > 0);
    }

    #[test]
    fn flattening_conventions() {
        let m = LinearMap::new(Matrix::from_i64_rows(q(), &[[1, 2], [3, 4]]).unwrap()).unwrap();
        let row: Vec<String> = m.flatten_row_major().iter().map(|s| s.to_string()).collect();
        let col: Vec<String> = m.flatten_col_major().iter().map(|s| s.to_string()).collect();
        assert_eq!(row, ["1", "2", "3", "4"]);
        assert_eq!(col, ["1", "3", "2", "4"]);
        assert_eq!(LinearMap::from_row_major(q(), 2, &m.flatten_row_major()).unwrap(), m);
        assert_eq!(LinearMap::from_col_major(q(), 2, &m.flatten_col_major()).unwrap(), m);
        // c_x^u is row u, column x.
        assert_eq!(m.coeff(1, 0).to_string(), "2");
    }

    fn element(n: usize, p: u64) -> impl Strategy<Value = AlgebraElement> {
        proptest::collection::vec(-4i64..=4, n).prop_map(move |c| {
            let f = if p == 0 {
                FieldSpec::Rationals
            } else {
                FieldSpec::prime(p).unwrap()
            };
            AlgebraElement::from_i64(f, &c)
        })
    }

    proptest! {
        #[test]
        fn augmentation_is_multiplicative_q(a in element(4, 0), b in element(4, 0), idx in 0usize..7) {
            let qd = &catalog(4).unwrap()[idx].quandle;
            let ab = multiply(&a, &b, qd).unwrap();
            prop_assert_eq!(augmentation(&ab), augmentation(&a) * augmentation(&b));
        }

        #[test]
        fn augmentation_is_multiplicative_gf5(a in element(5, 5), b in element(5, 5)) {
            let qd = Quandle::dihedral(5).unwrap();
            let ab = multiply(&a, &b, &qd).unwrap();
            prop_assert_eq!(augmentation(&ab), augmentation(&a) * augmentation(&b));
        }
    }
}
