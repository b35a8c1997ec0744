//! Symmetry relations, block shapes and predicted dimensions for
//! derivations of dihedral quandle algebras.
//!
//! `c(t, x)` below is the coefficient of `e_x` in `D(e_t)`, i.e. matrix
//! entry `(x, t)`, with both indices reduced mod `n`.

use serde::Serialize;

use super::{check_order, DerivationError};
use crate::exactla::{Matrix, Scalar};
use crate::qalgebra::LinearMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryRelation {
    /// `c(t+2d, x) = c(t, 2t+2d-x)` for all `t, d, x`; even `n`.
    Reflection,
    /// `c(t, x) = -c(t, x+2k)`; `n = 4k`.
    HalfAntiShift,
    /// `c(t, x) = c(t+2k, x+2k)`; `n = 4k`.
    HalfShift,
    /// `c(t, x) = -c(t, x+k)`; `n = 2k`, `k` odd.
    OddHalfAntiShift,
    /// `c(t, t+k) = 0`, with `k = n/4` when `4 | n` and `k = n/2` otherwise.
    DiagonalVanishing,
    /// `c(t, x) = c(t+k, x+k)`; `n = 4k`, `k` even.
    QuarterShift,
    /// `c(t, x) = c(t+k-1, x+k-1)`; `n = 4k`, `k` odd.
    QuarterShiftMinusOne,
}

impl SymmetryRelation {
    pub const ALL: [SymmetryRelation; 7] = [
        SymmetryRelation::Reflection,
        SymmetryRelation::HalfAntiShift,
        SymmetryRelation::HalfShift,
        SymmetryRelation::OddHalfAntiShift,
        SymmetryRelation::DiagonalVanishing,
        SymmetryRelation::QuarterShift,
        SymmetryRelation::QuarterShiftMinusOne,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            SymmetryRelation::Reflection => "c_{t+2d}^x = c_t^{2t+2d-x}",
            SymmetryRelation::HalfAntiShift => "c_t^x = -c_t^{x+2k}",
            SymmetryRelation::HalfShift => "c_t^x = c_{t+2k}^{x+2k}",
            SymmetryRelation::OddHalfAntiShift => "c_t^x = -c_t^{x+k}",
            SymmetryRelation::DiagonalVanishing => "c_t^{k+t} = 0",
            SymmetryRelation::QuarterShift => "c_t^x = c_{t+k}^{x+k}",
            SymmetryRelation::QuarterShiftMinusOne => "c_t^x = c_{t+k-1}^{x+k-1}",
        }
    }

    /// The `k` the relation uses for order `n`, or `None` if it does not apply.
    pub fn parameter(self, n: usize) -> Option<usize> {
        let four = n.is_multiple_of(4) && n > 0;
        let two_odd = n % 4 == 2;
        match self {
            SymmetryRelation::Reflection => (n.is_multiple_of(2) && n > 0).then_some(n / 2),
            SymmetryRelation::HalfAntiShift | SymmetryRelation::HalfShift => four.then_some(n / 4),
            SymmetryRelation::OddHalfAntiShift => two_odd.then_some(n / 2),
            SymmetryRelation::DiagonalVanishing => {
                if four {
                    Some(n / 4)
                } else if two_odd {
                    Some(n / 2)
                } else {
                    None
                }
            }
            SymmetryRelation::QuarterShift => (four && (n / 4).is_multiple_of(2)).then_some(n / 4),
            SymmetryRelation::QuarterShiftMinusOne => (four && (n / 4) % 2 == 1).then_some(n / 4),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RelationStatus {
    NotApplicable,
    Holds,
    /// First failing indices in `(t, x, d)` order; `d` is 0 for relations
    /// without a `d`.
    Fails {
        t: usize,
        x: usize,
        d: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub relation: SymmetryRelation,
    pub formula: &'static str,
    pub k: Option<usize>,
    #[serde(flatten)]
    pub status: RelationStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub n: usize,
    pub relations: Vec<RelationResult>,
}

impl SymmetryReport {
    pub fn status(&self, rel: SymmetryRelation) -> &RelationStatus {
        &self
            .relations
            .iter()
            .find(|r| r.relation == rel)
            .expect("every relation is reported")
            .status
    }

    pub fn holds(&self, rel: SymmetryRelation) -> bool {
        matches!(self.status(rel), RelationStatus::Holds)
    }

    /// No applicable relation fails.
    pub fn all_applicable_hold(&self) -> bool {
        self.relations
            .iter()
            .all(|r| !matches!(r.status, RelationStatus::Fails { .. }))
    }
}

struct Coeffs<'a> {
    d: &'a LinearMap,
    n: usize,
}

impl Coeffs<'_> {
    fn c(&self, t: usize, x: usize) -> &Scalar {
        self.d.coeff(t % self.n, x % self.n)
    }
}

fn first_failure(n: usize, with_d: bool, mut ok: impl FnMut(usize, usize, usize) -> bool) -> RelationStatus {
    let ds = if with_d { n } else { 1 };
    for t in 0..n {
        for x in 0..n {
            for d in 0..ds {
                if !ok(t, x, d) {
                    return RelationStatus::Fails { t, x, d };
                }
            }
        }
    }
    RelationStatus::Holds
}

fn evaluate(rel: SymmetryRelation, cs: &Coeffs<'_>, k: usize) -> RelationStatus {
    let n = cs.n;
    match rel {
        SymmetryRelation::Reflection => {
            first_failure(n, true, |t, x, d| cs.c(t + 2 * d, x) == cs.c(t, 2 * t + 2 * d + n - x))
        }
        SymmetryRelation::HalfAntiShift => first_failure(n, false, |t, x, _| *cs.c(t, x) == -cs.c(t, x + 2 * k)),
        SymmetryRelation::HalfShift => first_failure(n, false, |t, x, _| cs.c(t, x) == cs.c(t + 2 * k, x + 2 * k)),
        SymmetryRelation::OddHalfAntiShift => first_failure(n, false, |t, x, _| *cs.c(t, x) == -cs.c(t, x + k)),
        SymmetryRelation::DiagonalVanishing => {
            for t in 0..n {
                if !cs.c(t, t + k).is_zero() {
                    return RelationStatus::Fails {
                        t,
                        x: (t + k) % n,
                        d: 0,
                    };
                }
            }
            RelationStatus::Holds
        }
        SymmetryRelation::QuarterShift => first_failure(n, false, |t, x, _| cs.c(t, x) == cs.c(t + k, x + k)),
        SymmetryRelation::QuarterShiftMinusOne => {
            first_failure(n, false, |t, x, _| cs.c(t, x) == cs.c(t + k - 1, x + k - 1))
        }
    }
}

/// Evaluates every relation in [`SymmetryRelation::ALL`] on `D`.
pub fn dihedral_symmetry_report(d: &LinearMap, n: usize) -> Result<SymmetryReport, DerivationError> {
    check_order(d, n)?;
    let cs = Coeffs { d, n };
    let relations = SymmetryRelation::ALL
        .iter()
        .map(|&relation| {
            let k = relation.parameter(n);
            let status = match k {
                Some(k) => evaluate(relation, &cs, k),
                None => RelationStatus::NotApplicable,
            };
            RelationResult {
                relation,
                formula: relation.formula(),
                k,
                status,
            }
        })
        .collect();
    Ok(SymmetryReport { n, relations })
}

/// Block shapes of a matrix of even order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub n: usize,
    /// `n = 4k`: the top-left `2k × 2k` block `P` and whether `D = (P -P; -P P)`.
    pub pm: Option<(Matrix, bool)>,
    /// `n = 4k`, `k` even: `U`, `V` and whether `D` has the
    /// `(U V -U -V; -V U V -U; -U -V U V; V -U -V U)` pattern.
    pub uv: Option<(Matrix, Matrix, bool)>,
    /// `n = 2k`, `k` odd: whether rows `x` and `x+k` are negatives of each
    /// other in every column, i.e. `c(t, x+k) = -c(t, x)`.
    pub half_rows_opposite: Option<bool>,
}

fn block(m: &Matrix, r0: usize, c0: usize, size: usize) -> Matrix {
    Matrix::from_fn(m.field(), size, size, |r, c| m.get(r0 + r, c0 + c).clone())
}

/// Checks `m` against a grid of signed copies of `blocks`; `pattern[i][j]`
/// is `(block index, negate)`.
fn fits_pattern(m: &Matrix, size: usize, blocks: &[&Matrix], pattern: &[Vec<(usize, bool)>]) -> bool {
    pattern.iter().enumerate().all(|(bi, row)| {
        row.iter().enumerate().all(|(bj, &(which, neg))| {
            let b = blocks[which];
            (0..size).all(|r| {
                (0..size).all(|c| {
                    let want = if neg { -b.get(r, c) } else { b.get(r, c).clone() };
                    *m.get(bi * size + r, bj * size + c) == want
                })
            })
        })
    })
}

pub fn block_decomposition(d: &LinearMap, n: usize) -> Result<BlockReport, DerivationError> {
    check_order(d, n)?;
    if n % 2 == 1 || n == 0 {
        return Err(DerivationError::OddOrder(n));
    }
    let m = d.matrix();
    let mut report = BlockReport {
        n,
        pm: None,
        uv: None,
        half_rows_opposite: None,
    };
    if n.is_multiple_of(4) {
        let k = n / 4;
        let p = block(m, 0, 0, 2 * k);
        let holds = fits_pattern(
            m,
            2 * k,
            &[&p],
            &[vec![(0, false), (0, true)], vec![(0, true), (0, false)]],
        );
        report.pm = Some((p, holds));
        if k.is_multiple_of(2) {
            let u = block(m, 0, 0, k);
            let v = block(m, 0, k, k);
            let (pu, nu, pv, nv) = ((0, false), (0, true), (1, false), (1, true));
            let pattern = vec![
                vec![pu, pv, nu, nv],
                vec![nv, pu, pv, nu],
                vec![nu, nv, pu, pv],
                vec![pv, nu, nv, pu],
            ];
            let holds = fits_pattern(m, k, &[&u, &v], &pattern);
            report.uv = Some((u, v, holds));
        }
    } else {
        let k = n / 2;
        let holds = (0..k).all(|x| (0..n).all(|t| *m.get(x + k, t) == -m.get(x, t)));
        report.half_rows_opposite = Some(holds);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionSource {
    /// Odd order: only the zero derivation.
    OddOrder,
    /// The closed formula for `n = 4k`: `2k` for even `k`, `2k - 1` for odd `k`.
    Formula,
    /// `n ≡ 2 (mod 4)` or `n = 0`: no count is available.
    None,
}

/// A predicted characteristic-zero dimension. Always compare against the
/// solver rather than trusting the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimPrediction {
    pub n: usize,
    pub value: Option<usize>,
    pub source: PredictionSource,
}

pub fn predicted_dim_dihedral(n: usize) -> DimPrediction {
    let (value, source) = if n % 2 == 1 {
        (Some(0), PredictionSource::OddOrder)
    } else if n.is_multiple_of(4) && n > 0 {
        let k = n / 4;
        (
            Some(if k.is_multiple_of(2) { 2 * k } else { 2 * k - 1 }),
            PredictionSource::Formula,
        )
    } else {
        (None, PredictionSource::None)
    };
    DimPrediction { n, value, source }
}
