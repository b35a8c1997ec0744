use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({a},{b}) = {value} is out of range 0..{n}")]
    OutOfRange { a: usize, b: usize, value: usize, n: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {a} has no inverse")]
    NoInverse { a: usize },
    #[error("associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A finite group given by its Cayley table, `table[a][b] = a * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Group, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare {
                    row: a,
                    len: row.len(),
                    expected: n,
                });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::OutOfRange { a, b, value: v, n });
                }
                table.push(v);
            }
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or(GroupError::NoInverse { a })?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Group {
            n,
            table,
            identity,
            inverse,
        })
    }

    /// The cyclic group Z_n written additively.
    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, x: usize) -> bool {
        x < self.n && (0..self.n).all(|g| self.mul(x, g) == self.mul(g, x))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.is_central(x)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }
}
