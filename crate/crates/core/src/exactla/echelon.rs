use super::field::{FieldSpec, Scalar};
use super::LinAlgError;

/// A sparse row: strictly increasing column indices with non-zero values.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows are stored sparsely and kept fully reduced after every insertion:
/// each stored row has a leading 1 at its pivot column and zeros in every
/// other pivot column. The final row space therefore has a unique
/// representation regardless of insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<SparseRow>,
    /// `pivot_row[c]` is the index into `rows` whose pivot is column `c`.
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Inserts a dense row; returns whether the rank grew.
    pub fn insert_dense(&mut self, row: &[Scalar]) -> Result<bool, LinAlgError> {
        if row.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        self.insert_sparse(sparse)
    }

    /// Inserts a sparse row (indices must be increasing and in range).
    pub fn insert_sparse(&mut self, row: SparseRow) -> Result<bool, LinAlgError> {
        if let Some(&(last, _)) = row.last() {
            if last >= self.cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: self.cols,
                    found: last + 1,
                });
            }
        }
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        let mut v = self.reduce_sparse(row);
        if v.is_empty() {
            return Ok(false);
        }
        let (pivot, lead) = v[0].clone();
        if !lead.is_one() {
            let inv = lead.inv().expect("leading entry is non-zero");
            for (_, a) in v.iter_mut() {
                *a = &*a * &inv;
            }
        }
        for r in self.rows.iter_mut() {
            if let Ok(pos) = r.binary_search_by_key(&pivot, |(c, _)| *c) {
                let f = r[pos].1.clone();
                *r = axpy(r, &f, &v);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(v);
        Ok(true)
    }

    /// Reduces a sparse vector modulo the current row space. The result is
    /// zero iff the vector lies in the span.
    pub fn reduce_sparse(&self, mut v: SparseRow) -> SparseRow {
        let mut i = 0;
        while i < v.len() {
            let c = v[i].0;
            match self.pivot_row[c] {
                Some(r) => {
                    let f = v[i].1.clone();
                    v = axpy(&v, &f, &self.rows[r]);
                    // The entry at `c` cancelled; anything new lies to the right.
                }
                None => i += 1,
            }
        }
        v
    }

    /// Coordinates of `v` with respect to the stored rows (ordered by pivot),
    /// or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let sparse: SparseRow = v
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (i, a.clone()))
            .collect();
        if !self.reduce_sparse(sparse).is_empty() {
            return None;
        }
        Some(self.pivots().into_iter().map(|c| v[c].clone()).collect())
    }

    /// Rows in pivot order, as dense vectors.
    pub fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        self.pivots()
            .into_iter()
            .map(|c| {
                let r = &self.rows[self.pivot_row[c].expect("pivot")];
                let mut dense = vec![self.field.zero(); self.cols];
                for (j, a) in r {
                    dense[*j] = a.clone();
                }
                dense
            })
            .collect()
    }
}

/// Returns `a - f * b` for sparse rows.
fn axpy(a: &[(usize, Scalar)], f: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
