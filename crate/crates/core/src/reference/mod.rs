//! Reference parametrizations of derivation spaces, embedded from
//! `data/tables/*.toml`, and their comparison against the solver.
//!
//! Each file names a quandle, a field, the stated dimension and a matrix of
//! linear forms in free parameters. The parameters span a subspace which is
//! compared with the computed derivation space as canonical bases, so the
//! particular choice of free parameters does not matter.

mod linexpr;

use serde::Deserialize;
use thiserror::Error;

pub use linexpr::{ExprError, LinExpr};

use crate::derivations::derivation_space;
use crate::exactla::{FieldError, FieldSpec, Scalar, SubspaceBasis};
use crate::quandle::{builtin, QuandleError};

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../data/tables/", $name, ".toml")))),*]
    };
}

const FILES: &[(&str, &str)] = entries![
    "order3-3.1-q",
    "order3-3.1-gf3",
    "order3-3.2-q",
    "order3-3.2-gf3",
    "order3-3.3-q",
    "order3-3.3-gf3",
    "order4-4.1-q",
    "order4-4.2-q",
    "order4-4.3-q",
    "order4-4.4-q",
    "order4-4.5-q",
    "order4-4.6-q",
    "order4-4.7-q",
    "order4-4.1-gf2",
    "order4-4.2-gf2",
    "order4-4.3-gf2",
    "order4-4.4-gf2",
    "order4-4.5-gf2",
    "order4-4.6-gf2",
    "order4-4.7-gf2",
    "dihedral-8-q",
    "dihedral-16-q",
    "dihedral-24-q",
    "dihedral-3-gf3",
    "dihedral-4-gf2",
    "dihedral-5-gf5",
    "dihedral-5-gf2",
    "dihedral-5-gf3",
    "dihedral-6-gf2",
    "dihedral-6-gf3",
    "s3-q",
    "s3-gf2",
    "s3-gf3",
];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReferenceError {
    #[error("{name}: {message}")]
    Toml { name: String, message: String },
    #[error("{name}: {source}")]
    Expr { name: String, source: ExprError },
    #[error("{name}: {message}")]
    Shape { name: String, message: String },
    #[error("{name}: {source}")]
    Quandle { name: String, source: QuandleError },
    #[error("{name}: {source}")]
    Field { name: String, source: FieldError },
    #[error("no reference entry named {0:?}")]
    Unknown(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    quandle: String,
    field: String,
    dim: usize,
    #[serde(default)]
    zero: bool,
    matrix: Option<Vec<Vec<String>>>,
    u: Option<Vec<Vec<String>>>,
    v: Option<Vec<Vec<String>>>,
}

/// A parsed reference entry: `cells[u][x]` is the linear form for entry
/// `(u, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceEntry {
    pub name: String,
    pub quandle: String,
    pub field: FieldSpec,
    pub stated_dim: usize,
    pub cells: Vec<Vec<LinExpr>>,
}

fn parse_grid(name: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<LinExpr>>, ReferenceError> {
    let k = rows.len();
    rows.iter()
        .map(|r| {
            if r.len() != k {
                return Err(ReferenceError::Shape {
                    name: name.to_string(),
                    message: format!("row of length {} in a {k}-row block", r.len()),
                });
            }
            r.iter()
                .map(|s| {
                    LinExpr::parse(s).map_err(|source| ReferenceError::Expr {
                        name: name.to_string(),
                        source,
                    })
                })
                .collect()
        })
        .collect()
}

/// `(U V -U -V; -V U V -U; -U -V U V; V -U -V U)`.
fn assemble_uv(u: &[Vec<LinExpr>], v: &[Vec<LinExpr>]) -> Vec<Vec<LinExpr>> {
    const PATTERN: [[(bool, i64); 4]; 4] = [
        [(true, 1), (false, 1), (true, -1), (false, -1)],
        [(false, -1), (true, 1), (false, 1), (true, -1)],
        [(true, -1), (false, -1), (true, 1), (false, 1)],
        [(false, 1), (true, -1), (false, -1), (true, 1)],
    ];
    let k = u.len();
    (0..4 * k)
        .map(|r| {
            (0..4 * k)
                .map(|c| {
                    let (is_u, sign) = PATTERN[r / k][c / k];
                    let b = if is_u { u } else { v };
                    b[r % k][c % k].scaled(sign)
                })
                .collect()
        })
        .collect()
}

impl ReferenceEntry {
    pub fn parse(name: &str, text: &str) -> Result<ReferenceEntry, ReferenceError> {
        let raw: RawEntry = toml::from_str(text).map_err(|e| ReferenceError::Toml {
            name: name.to_string(),
            message: e.to_string(),
        })?;
        let field: FieldSpec = raw.field.parse().map_err(|source| ReferenceError::Field {
            name: name.to_string(),
            source,
        })?;
        let n = builtin(&raw.quandle)
            .map_err(|source| ReferenceError::Quandle {
                name: name.to_string(),
                source,
            })?
            .order();
        let shape = |message: String| ReferenceError::Shape {
            name: name.to_string(),
            message,
        };
        let cells = match (raw.zero, raw.matrix, raw.u, raw.v) {
            (true, None, None, None) => vec![vec![LinExpr::default(); n]; n],
            (false, Some(m), None, None) => parse_grid(name, &m)?,
            (false, None, Some(u), Some(v)) => {
                let (u, v) = (parse_grid(name, &u)?, parse_grid(name, &v)?);
                if u.len() != v.len() {
                    return Err(shape("U and V differ in size".into()));
                }
                assemble_uv(&u, &v)
            }
            _ => return Err(shape("expected exactly one of zero, matrix, or u and v".into())),
        };
        if cells.len() != n {
            return Err(shape(format!(
                "matrix has order {}, quandle has order {n}",
                cells.len()
            )));
        }
        Ok(ReferenceEntry {
            name: name.to_string(),
            quandle: raw.quandle,
            field,
            stated_dim: raw.dim,
            cells,
        })
    }

    pub fn order(&self) -> usize {
        self.cells.len()
    }

    pub fn num_params(&self) -> usize {
        self.cells.iter().flatten().map(LinExpr::max_param).max().unwrap_or(0)
    }

    /// The matrix obtained by setting parameter `i` to 1 and the rest to 0,
    /// flattened row-major.
    pub fn param_matrix(&self, i: usize) -> Vec<Scalar> {
        self.cells
            .iter()
            .flatten()
            .map(|e| self.field.from_i64(e.coeff(i)))
            .collect()
    }

    /// Span of all parameter matrices, flattened row-major.
    pub fn span(&self) -> SubspaceBasis {
        let n = self.order();
        SubspaceBasis::from_vectors(self.field, n * n, (1..=self.num_params()).map(|i| self.param_matrix(i)))
            .expect("length n²")
    }
}

pub fn entry_names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(name, _)| *name)
}

pub fn load(name: &str) -> Result<ReferenceEntry, ReferenceError> {
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| ReferenceError::Unknown(name.to_string()))?;
    ReferenceEntry::parse(name, text)
}

pub fn load_all() -> Result<Vec<ReferenceEntry>, ReferenceError> {
    FILES
        .iter()
        .map(|(name, text)| ReferenceEntry::parse(name, text))
        .collect()
}

/// Outcome of comparing one reference entry with the solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub name: String,
    pub quandle: String,
    pub field: FieldSpec,
    pub stated_dim: usize,
    /// Dimension spanned by the parametrization.
    pub param_rank: usize,
    pub solver_dim: usize,
    /// Every parametrized matrix is a derivation.
    pub contained: bool,
    /// The parametrized span equals the derivation space.
    pub equal: bool,
}

impl Comparison {
    pub fn passes(&self) -> bool {
        self.equal && self.stated_dim == self.solver_dim
    }
}

pub fn compare(entry: &ReferenceEntry) -> Comparison {
    let q = builtin(&entry.quandle).expect("validated on load");
    let der = derivation_space(&q, entry.field);
    let span = entry.span();
    Comparison {
        name: entry.name.clone(),
        quandle: entry.quandle.clone(),
        field: entry.field,
        stated_dim: entry.stated_dim,
        param_rank: span.dim(),
        solver_dim: der.dim(),
        contained: span.is_subspace_of(der.span()).expect("same ambient"),
        equal: &span == der.span(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_loads() {
        let all = load_all().unwrap();
        assert_eq!(all.len(), FILES.len());
        for e in &all {
            assert_eq!(e.cells.len(), e.order());
            assert!(e.cells.iter().all(|r| r.len() == e.order()), "{}", e.name);
        }
    }

    #[test]
    fn uv_assembly() {
        let e = load("dihedral-8-q").unwrap();
        assert_eq!(e.order(), 8);
        assert_eq!(e.num_params(), 4);
        // Block row 2 starts with -U: -a_1 at (4, 0); row 0 column 3 is V[0][1] = -a_2.
        assert_eq!(e.cells[4][0], LinExpr::param(1).scaled(-1));
        assert_eq!(e.cells[0][3], LinExpr::param(2).scaled(-1));
    }

    #[test]
    fn zero_entries_have_no_params() {
        let e = load("order4-4.2-q").unwrap();
        assert_eq!(e.num_params(), 0);
        assert!(e.span().is_zero());
    }

    #[test]
    fn malformed_entries_are_rejected() {
        let bad = |text: &str| ReferenceEntry::parse("t", text).unwrap_err();
        assert!(matches!(bad("quandle = 3"), ReferenceError::Toml { .. }));
        let base = "quandle = \"trivial:2\"\nfield = \"Q\"\ndim = 0\n";
        assert!(matches!(bad(base), ReferenceError::Shape { .. }));
        assert!(matches!(
            bad(&format!("{base}matrix = [[\"a_1\", \"b\"], [\"0\", \"0\"]]")),
            ReferenceError::Expr { .. }
        ));
        assert!(matches!(
            bad(&format!("{base}matrix = [[\"a_1\"]]")),
            ReferenceError::Shape { .. }
        ));
        assert!(matches!(
            bad("quandle = \"cube\"\nfield = \"Q\"\ndim = 0\nzero = true"),
            ReferenceError::Quandle { .. }
        ));
        assert!(matches!(
            bad("quandle = \"trivial:2\"\nfield = \"GF(4)\"\ndim = 0\nzero = true"),
            ReferenceError::Field { .. }
        ));
        assert!(matches!(load("nope"), Err(ReferenceError::Unknown(_))));
    }

    #[test]
    fn entries_in_agreement() {
        for name in [
            "order3-3.2-q",
            "order3-3.3-gf3",
            "order4-4.6-q",
            "dihedral-3-gf3",
            "s3-q",
        ] {
            let c = compare(&load(name).unwrap());
            assert!(c.passes(), "{c:?}");
        }
    }
}
