use std::fmt;

use super::echelon::Echelon;
use super::field::{FieldSpec, Scalar};
use super::subspace::SubspaceBasis;
use super::LinAlgError;

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix::from_fn(field, n, n, |r, c| field.from_i64((r == c) as i64))
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinAlgError::RaggedRows {
                    row: i,
                    len: row.len(),
                    expected: cols,
                });
            }
            for v in row {
                if v.field() != field {
                    return Err(LinAlgError::FieldMismatch {
                        left: field,
                        right: v.field(),
                    });
                }
                entries.push(v);
            }
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            entries,
        })
    }

    /// Integer matrix mapped into `field`.
    pub fn from_i64_rows<R: AsRef<[i64]>>(field: FieldSpec, rows: &[R]) -> Result<Self, LinAlgError> {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
            ..self.clone()
        })
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            entries: self.entries.iter().map(|a| a * k).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            e.insert_dense(self.row(r)).expect("row length matches");
        }
        e
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(Scalar::to_signed_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form and pivot columns. Zero rows are kept at the
/// bottom so the shape matches the input.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let e = m.echelon();
    let pivots = e.pivots();
    let mut rows = e.dense_rows();
    rows.resize(m.rows, vec![m.field.zero(); m.cols]);
    let out = if m.rows == 0 {
        Matrix::zeros(m.field, 0, m.cols)
    } else {
        Matrix::from_rows(m.field, rows).expect("rectangular")
    };
    (out, pivots)
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix) -> SubspaceBasis {
    kernel_of(&m.echelon())
}

/// Canonical basis of the vectors orthogonal to every row held by `e`.
pub fn kernel_of(e: &Echelon) -> SubspaceBasis {
    let field = e.field();
    let cols = e.cols();
    let pivots = e.pivots();
    let rows = e.dense_rows();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols).filter(|&c| !is_pivot[c]).map(|free| {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        v
    });
    SubspaceBasis::from_vectors(field, cols, vectors).expect("kernel vectors have ambient length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(q(), 3);
        let (r, piv) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(q(), 2, 2);
        let (r, piv) = rref(&z);
        assert_eq!(r, z);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64_rows(q(), &[[2, 4], [1, 2]]).unwrap();
        let (r, piv) = rref(&m);
        assert_eq!(r, Matrix::from_i64_rows(q(), &[[1, 2], [0, 0]]).unwrap());
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_i64_rows(q(), &[[2, 1, 0], [4, 0, 1]]).unwrap();
        let (r, _) = rref(&m);
        assert_eq!(r.get(0, 2).to_string(), "1/4");
        assert_eq!(r.get(1, 2).to_string(), "-1/2");
    }

    #[test]
    fn nullspace_identity_is_empty() {
        assert_eq!(nullspace(&Matrix::identity(q(), 4)).dim(), 0);
    }

    #[test]
    fn nullspace_zero_map_is_everything() {
        let ns = nullspace(&Matrix::zeros(q(), 2, 3));
        assert_eq!(ns.dim(), 3);
        assert_eq!(ns, SubspaceBasis::full(q(), 3));
    }

    #[test]
    fn nullspace_gf2_matches_enumeration() {
        let f = gf(2);
        let m = Matrix::from_i64_rows(f, &[[1, 1, 1]]).unwrap();
        let ns = nullspace(&m);
        assert_eq!(ns.dim(), 2);
        let count = (0..8u32)
            .filter(|bits| {
                let v: Vec<Scalar> = (0..3).map(|i| f.from_i64(((bits >> i) & 1) as i64)).collect();
                m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero)
            })
            .count();
        assert_eq!(count, 1 << ns.dim());
        for v in ns.vectors() {
            assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = Matrix::from_i64_rows(q(), &[[1, 2], [3, 4]]).unwrap();
        let b = Matrix::from_i64_rows(q(), &[[0, 1], [1, 0]]).unwrap();
        assert_eq!(
            a.mul(&b).unwrap(),
            Matrix::from_i64_rows(q(), &[[2, 1], [4, 3]]).unwrap()
        );
        assert_eq!(a.transpose().get(0, 1).to_string(), "3");
        assert!(a.mul(&Matrix::zeros(q(), 3, 1)).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::from_i64_rows(q(), &[vec![1, 2], vec![1]]).unwrap_err();
        assert!(matches!(err, LinAlgError::RaggedRows { row: 1, .. }));
    }

    fn small_matrix(p: u64, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p as i64, r * c).prop_map(move |vals| {
                let rows: Vec<Vec<i64>> = vals.chunks(c).map(<[i64]>::to_vec).collect();
                Matrix::from_i64_rows(FieldSpec::prime(p).unwrap(), &rows).unwrap()
            })
        })
    }

    fn small_rational_matrix() -> impl Strategy<Value = Matrix> {
        (1..5usize, 1..5usize).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |vals| {
                let rows: Vec<Vec<i64>> = vals.chunks(c).map(<[i64]>::to_vec).collect();
                Matrix::from_i64_rows(FieldSpec::Rationals, &rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn gf2_nullspace_dim_matches_enumeration(m in small_matrix(2, 5, 4)) {
            let f = m.field();
            let count = (0..(1u32 << m.cols()))
                .filter(|bits| {
                    let v: Vec<Scalar> = (0..m.cols()).map(|i| f.from_i64(((bits >> i) & 1) as i64)).collect();
                    m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero)
                })
                .count();
            prop_assert_eq!(count, 1usize << nullspace(&m).dim());
        }

        #[test]
        fn rref_is_idempotent(m in small_rational_matrix()) {
            let (r1, p1) = rref(&m);
            let (r2, p2) = rref(&r1);
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rank_nullity(m in small_rational_matrix()) {
            let (_, piv) = rref(&m);
            let ns = nullspace(&m);
            prop_assert_eq!(piv.len() + ns.dim(), m.cols());
            for v in ns.vectors() {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
            }
        }
    }
}
