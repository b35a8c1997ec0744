use super::echelon::Echelon;
use super::field::{FieldSpec, Scalar};
use super::LinAlgError;

/// A subspace of `field^ambient_dim`, stored as the rows of its reduced
/// row-echelon basis. Two subspaces are equal iff their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    field: FieldSpec,
    ambient_dim: usize,
    vectors: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    /// Span of arbitrary generating vectors.
    pub fn from_vectors<I>(field: FieldSpec, ambient_dim: usize, vectors: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut e = Echelon::new(field, ambient_dim);
        for v in vectors {
            check_vector(field, ambient_dim, &v)?;
            e.insert_dense(&v)?;
        }
        Ok(SubspaceBasis::from_echelon(&e))
    }

    pub(crate) fn from_echelon(e: &Echelon) -> Self {
        SubspaceBasis {
            field: e.field(),
            ambient_dim: e.cols(),
            vectors: e.dense_rows(),
            pivots: e.pivots(),
        }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        SubspaceBasis {
            field,
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let vectors = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| field.from_i64((i == j) as i64)).collect())
            .collect();
        SubspaceBasis {
            field,
            ambient_dim,
            vectors,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn to_echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.ambient_dim);
        for v in &self.vectors {
            e.insert_dense(v).expect("stored vectors have ambient length");
        }
        e
    }

    /// Membership test. Returns the coordinates of `v` in this basis when it
    /// lies in the span, `None` otherwise.
    pub fn contains(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
        check_vector(self.field, self.ambient_dim, v)?;
        // For an RREF basis the only candidate coordinates are the entries
        // of `v` at the pivot columns.
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (r, a) in residual.iter_mut().zip(row) {
                if !a.is_zero() {
                    *r = &*r - &(c * a);
                }
            }
        }
        Ok(residual.iter().all(Scalar::is_zero).then_some(coords))
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool, LinAlgError> {
        check_compatible(self, other)?;
        for v in &self.vectors {
            if other.contains(v)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_vector(field: FieldSpec, ambient_dim: usize, v: &[Scalar]) -> Result<(), LinAlgError> {
    if v.len() != ambient_dim {
        return Err(LinAlgError::DimensionMismatch {
            expected: ambient_dim,
            found: v.len(),
        });
    }
    if let Some(bad) = v.iter().find(|a| a.field() != field) {
        return Err(LinAlgError::FieldMismatch {
            left: field,
            right: bad.field(),
        });
    }
    Ok(())
}

fn check_compatible(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<(), LinAlgError> {
    if a.field != b.field {
        return Err(LinAlgError::FieldMismatch {
            left: a.field,
            right: b.field,
        });
    }
    if a.ambient_dim != b.ambient_dim {
        return Err(LinAlgError::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    Ok(())
}

/// Solves `sum_i c_i * generators[i] = v`. Returns `None` when `v` is outside
/// the span; when the generators are independent the solution is unique,
/// otherwise free coefficients are set to zero.
pub fn coordinates(
    field: FieldSpec,
    ambient_dim: usize,
    generators: &[Vec<Scalar>],
    v: &[Scalar],
) -> Result<Option<Vec<Scalar>>, LinAlgError> {
    check_vector(field, ambient_dim, v)?;
    for g in generators {
        check_vector(field, ambient_dim, g)?;
    }
    let k = generators.len();
    // Augmented system [G | v], one row per ambient coordinate.
    let mut e = Echelon::new(field, k + 1);
    for i in 0..ambient_dim {
        let row: Vec<Scalar> = generators.iter().map(|g| g[i].clone()).chain([v[i].clone()]).collect();
        e.insert_dense(&row)?;
    }
    let pivots = e.pivots();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut solution = vec![field.zero(); k];
    for (row, p) in e.dense_rows().into_iter().zip(pivots) {
        solution[p] = row[k].clone();
    }
    Ok(Some(solution))
}

/// Canonical basis of `A + B`.
pub fn span_sum(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis, LinAlgError> {
    check_compatible(a, b)?;
    let mut e = a.to_echelon();
    for v in &b.vectors {
        e.insert_dense(v)?;
    }
    Ok(SubspaceBasis::from_echelon(&e))
}

/// Canonical basis of `A ∩ B` by the Zassenhaus algorithm: row-reduce the
/// block rows `[a | a]` and `[b | 0]`; the rows whose left half vanishes carry
/// a basis of the intersection in their right half.
pub fn span_intersect(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis, LinAlgError> {
    check_compatible(a, b)?;
    let n = a.ambient_dim;
    let field = a.field;
    let mut e = Echelon::new(field, 2 * n);
    for v in &a.vectors {
        let row: Vec<Scalar> = v.iter().chain(v.iter()).cloned().collect();
        e.insert_dense(&row)?;
    }
    for v in &b.vectors {
        let row: Vec<Scalar> = v.iter().cloned().chain(std::iter::repeat_n(field.zero(), n)).collect();
        e.insert_dense(&row)?;
    }
    let pivots = e.pivots();
    let right_halves = e
        .dense_rows()
        .into_iter()
        .zip(pivots)
        .filter(|(_, p)| *p >= n)
        .map(|(row, _)| row[n..].to_vec());
    SubspaceBasis::from_vectors(field, n, right_halves)
}
