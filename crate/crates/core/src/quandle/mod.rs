//! Finite quandles as validated Cayley tables.
//!
//! Elements are `0..n` and the table is read as `table[x][y] = x ⊳ y`: the row
//! element is acted on, the column element acts.

mod catalog;
mod group;

pub use catalog::{builtin, catalog, catalog_entry, catalog_labels, symmetric_group_s3, CatalogEntry};
pub use group::{Group, GroupError};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("a quandle needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({x},{y}) = {value} is out of range 0..{n}")]
    OutOfRange { x: usize, y: usize, value: usize, n: usize },
    #[error("axiom I fails at x = {x}: x ⊳ x = {value}")]
    AxiomI { x: usize, value: usize },
    #[error("axiom II fails at y = {y}: {x1} ⊳ y = {x2} ⊳ y = {value}")]
    AxiomII {
        y: usize,
        x1: usize,
        x2: usize,
        value: usize,
    },
    #[error("axiom III fails at (x, y, z) = ({x}, {y}, {z})")]
    AxiomIII { x: usize, y: usize, z: usize },
    #[error("not a group: {0}")]
    NotAGroup(#[from] GroupError),
    #[error("alpha = {alpha} is not a unit modulo {n}")]
    NonUnitAlpha { n: usize, alpha: usize },
    #[error("catalog has no quandles of order {0} (supported: 3, 4)")]
    UnsupportedOrder(usize),
    #[error("unknown catalog label {0:?}")]
    UnknownLabel(String),
    #[error("{0} is not a permutation of 0..{1}")]
    BadPermutation(String, usize),
    #[error("declared order {declared} does not match table with {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error("cannot parse quandle {0:?}; expected trivial:N, dihedral:N, alexander:N:A, catalog:L or s3")]
    BadSpec(String),
}

/// Parameters of the Alexander quandle `x ⊳ y = alpha*x + beta*y` on `Z_n`,
/// with `alpha` a unit and `beta = 1 - alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlexanderParams {
    n: usize,
    alpha: usize,
    beta: usize,
}

impl AlexanderParams {
    pub fn new(n: usize, alpha: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let alpha = alpha % n;
        if alpha.gcd(&n) != 1 {
            return Err(QuandleError::NonUnitAlpha { n, alpha });
        }
        Ok(AlexanderParams {
            n,
            alpha,
            beta: (n + 1 - alpha) % n,
        })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn alpha(self) -> usize {
        self.alpha
    }

    pub fn beta(self) -> usize {
        self.beta
    }
}

/// A finite quandle. Only constructible through validation, so every value
/// satisfies the three quandle axioms.
#[derive(Clone, Debug)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
    /// `right_div[z * n + y]` is the unique `w` with `w ⊳ y = z`.
    right_div: Vec<usize>,
    alexander: Option<AlexanderParams>,
}

impl PartialEq for Quandle {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for Quandle {}

/// Serialized form `{"n": int, "table": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleData {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

/// Structural predicates of a quandle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuandleProps {
    pub involutive: bool,
    pub latin: bool,
    pub medial: bool,
    pub connected: bool,
    /// Orbits of the inner automorphism group, each sorted, ordered by least
    /// element.
    pub orbits: Vec<Vec<usize>>,
}

/// Checks the quandle axioms and returns the first violation found.
pub fn validate(rows: &[Vec<usize>]) -> Result<Quandle, QuandleError> {
    Quandle::from_rows(rows)
}

impl Quandle {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Quandle, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::NotSquare {
                    row: x,
                    len: row.len(),
                    expected: n,
                });
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(QuandleError::OutOfRange { x, y, value: v, n });
                }
                table.push(v);
            }
        }
        let op = |x: usize, y: usize| table[x * n + y];
        for x in 0..n {
            if op(x, x) != x {
                return Err(QuandleError::AxiomI { x, value: op(x, x) });
            }
        }
        let mut right_div = vec![usize::MAX; n * n];
        for y in 0..n {
            for x in 0..n {
                let z = op(x, y);
                let slot = &mut right_div[z * n + y];
                if *slot != usize::MAX {
                    return Err(QuandleError::AxiomII {
                        y,
                        x1: *slot,
                        x2: x,
                        value: z,
                    });
                }
                *slot = x;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if op(op(x, y), z) != op(op(x, z), op(y, z)) {
                        return Err(QuandleError::AxiomIII { x, y, z });
                    }
                }
            }
        }
        Ok(Quandle {
            n,
            table,
            right_div,
            alexander: None,
        })
    }

    /// `x ⊳ y = x`.
    pub fn trivial(n: usize) -> Result<Quandle, QuandleError> {
        let mut q = Quandle::from_fn(n, |x, _| x)?;
        q.alexander = Some(AlexanderParams::new(n, 1)?);
        Ok(q)
    }

    /// `x ⊳ y = 2y - x (mod n)`.
    pub fn dihedral(n: usize) -> Result<Quandle, QuandleError> {
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        Quandle::alexander(AlexanderParams::new(n, n - 1)?)
    }

    /// `x ⊳ y = alpha*x + beta*y (mod n)`.
    pub fn alexander(params: AlexanderParams) -> Result<Quandle, QuandleError> {
        let AlexanderParams { n, alpha, beta } = params;
        let mut q = Quandle::from_fn(n, |x, y| (alpha * x + beta * y) % n)?;
        q.alexander = Some(params);
        Ok(q)
    }

    /// Conjugation quandle `x ⊳ y = y⁻¹ x y` of a group given by its Cayley
    /// table.
    pub fn conjugation(group_table: &[Vec<usize>]) -> Result<Quandle, QuandleError> {
        let g = Group::from_table(group_table)?;
        Ok(Quandle::conjugation_of(&g))
    }

    pub fn conjugation_of(g: &Group) -> Quandle {
        Quandle::from_fn(g.order(), |x, y| g.mul(g.mul(g.inv(y), x), y)).expect("conjugation always yields a quandle")
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Quandle, QuandleError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Quandle::from_rows(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ⊳ y`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The unique `w` with `w ⊳ y = z`.
    pub fn right_divide(&self, z: usize, y: usize) -> usize {
        self.right_div[z * self.n + y]
    }

    /// All `w` with `x ⊳ w = z` (possibly none).
    pub fn left_preimage(&self, x: usize, z: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.op(x, w) == z)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn alexander_params(&self) -> Option<AlexanderParams> {
        self.alexander
    }

    /// Whether this is the dihedral quandle on `Z_n` in its natural labelling.
    pub fn is_dihedral(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| self.op(x, y) == (2 * y + n - x) % n))
    }

    /// Transports the structure along the bijection `x ↦ perm[x]`:
    /// the result satisfies `perm[x] ⊳' perm[y] = perm[x ⊳ y]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Quandle, QuandleError> {
        check_permutation(perm, self.n)?;
        let mut rows = vec![vec![0; self.n]; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                rows[perm[x]][perm[y]] = perm[self.op(x, y)];
            }
        }
        Quandle::from_rows(&rows)
    }

    pub fn props(&self) -> QuandleProps {
        let n = self.n;
        let op = |x, y| self.op(x, y);
        let involutive = (0..n).all(|x| (0..n).all(|y| op(op(y, x), x) == y));
        let latin = (0..n).all(|x| {
            let mut seen = vec![false; n];
            (0..n).all(|y| !std::mem::replace(&mut seen[op(x, y)], true))
        });
        let medial = (0..n)
            .all(|w| (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| op(op(w, x), op(y, z)) == op(op(w, y), op(x, z))))));
        let orbits = self.orbits();
        QuandleProps {
            involutive,
            latin,
            medial,
            connected: orbits.len() == 1,
            orbits,
        }
    }

    /// Orbits of the group generated by the right multiplications: the
    /// connected components of the graph with edges `y` to `y ⊳ x`.
    fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (find(&mut parent, y), find(&mut parent, self.op(y, x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut index_of_root = vec![usize::MAX; n];
        for y in 0..n {
            let r = find(&mut parent, y);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = orbits.len();
                orbits.push(Vec::new());
            }
            orbits[index_of_root[r]].push(y);
        }
        orbits
    }

    pub fn to_data(&self) -> QuandleData {
        QuandleData {
            n: self.n,
            table: self.rows(),
        }
    }

    pub fn from_data(data: &QuandleData) -> Result<Quandle, QuandleError> {
        if data.n != data.table.len() {
            return Err(QuandleError::OrderMismatch {
                declared: data.n,
                rows: data.table.len(),
            });
        }
        Quandle::from_rows(&data.table)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<(), QuandleError> {
    let mut seen = vec![false; n];
    let ok = perm.len() == n && perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true));
    if ok {
        Ok(())
    } else {
        Err(QuandleError::BadPermutation(format!("{perm:?}"), n))
    }
}
