//! The Lie transformation algebra `𝒯(A)`: the smallest Lie algebra of
//! operators containing every left and right multiplication, inner
//! derivations, and the product-form bounds for `𝒯(A)`.
//!
//! Operators are flattened column-major: entry `(u, x)` sits at `x*n + u`.

use thiserror::Error;

use crate::derivations::derivation_space;
use crate::exactla::{span_intersect, Echelon, FieldSpec, LinAlgError, SubspaceBasis};
use crate::qalgebra::{left_mult, right_mult, AlgebraError, LinearMap};
use crate::quandle::Quandle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("quandle was not constructed as an Alexander quandle")]
    NotAlexander,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &LinearMap, b: &LinearMap) -> Result<LinearMap, LieError> {
    Ok(a.commutator(b)?)
}

/// One step of a span computation that raised the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogEntry {
    pub label: String,
    pub dim: usize,
}

/// A span of operators, kept as the accepted independent operators in
/// insertion order plus the canonical flattened basis.
#[derive(Clone, Debug)]
pub struct OperatorSpace {
    field: FieldSpec,
    n: usize,
    echelon: Echelon,
    operators: Vec<LinearMap>,
    log: Vec<LogEntry>,
}

impl OperatorSpace {
    pub fn new(field: FieldSpec, n: usize) -> Self {
        OperatorSpace {
            field,
            n,
            echelon: Echelon::new(field, n * n),
            operators: Vec::new(),
            log: Vec::new(),
        }
    }

    /// Adds `op` if it is independent of the current span; returns whether
    /// the dimension grew.
    pub fn insert(&mut self, op: LinearMap, label: impl Into<String>) -> bool {
        let grew = self
            .echelon
            .insert_dense(&op.flatten_col_major())
            .expect("operator of order n");
        if grew {
            self.operators.push(op);
            self.log.push(LogEntry {
                label: label.into(),
                dim: self.operators.len(),
            });
        }
        grew
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.operators.len()
    }

    /// Independent operators in the order they were accepted.
    pub fn operators(&self) -> &[LinearMap] {
        &self.operators
    }

    pub fn log(&self) -> &[LogEntry] {
        &self.log
    }

    pub fn basis(&self) -> SubspaceBasis {
        SubspaceBasis::from_vectors(self.field, self.n * self.n, self.echelon.dense_rows()).expect("length n²")
    }

    pub fn contains(&self, op: &LinearMap) -> bool {
        op.order() == self.n && self.echelon.coordinates(&op.flatten_col_major()).is_some()
    }

    /// Every bracket of accepted operators lies in the span.
    pub fn is_bracket_closed(&self) -> bool {
        self.operators.iter().enumerate().all(|(i, a)| {
            self.operators[..i]
                .iter()
                .all(|b| self.contains(&a.commutator(b).expect("same order")))
        })
    }

    /// Closes the span under brackets of all accepted pairs.
    fn close_under_brackets(&mut self) {
        let mut i = 0;
        while i < self.operators.len() {
            for j in 0..i {
                let c = self.operators[i].commutator(&self.operators[j]).expect("same order");
                let label = format!("[{},{}]", self.log[i].label, self.log[j].label);
                self.insert(c, label);
            }
            i += 1;
        }
    }
}

fn multiplications(q: &Quandle, f: FieldSpec) -> Vec<(String, LinearMap)> {
    let n = q.order();
    let mut ops = Vec::with_capacity(2 * n);
    for x in 0..n {
        ops.push((format!("L{x}"), left_mult(x, q, f).expect("x < n")));
    }
    for x in 0..n {
        ops.push((format!("R{x}"), right_mult(x, q, f).expect("x < n")));
    }
    ops
}

/// `𝒯(A)`, computed by closing `span{L_x, R_x}` under brackets of all pairs.
pub fn lie_transformation_algebra(q: &Quandle, f: FieldSpec) -> OperatorSpace {
    let mut space = OperatorSpace::new(f, q.order());
    for (label, op) in multiplications(q, f) {
        space.insert(op, label);
    }
    space.close_under_brackets();
    debug_assert_eq!(space.basis(), t1_tower(q, f));
    space
}

/// `T_1 + T_2 + ...` with `T_1 = span{L_x, R_x}` and `T_i = [T_1, T_{i-1}]`,
/// summed until the total stops growing.
pub fn t1_tower(q: &Quandle, f: FieldSpec) -> SubspaceBasis {
    let n = q.order();
    let gens: Vec<LinearMap> = multiplications(q, f).into_iter().map(|(_, op)| op).collect();
    let mut total = Echelon::new(f, n * n);
    let mut layer: Vec<LinearMap> = Vec::new();
    for g in &gens {
        if total.insert_dense(&g.flatten_col_major()).expect("length n²") {
            layer.push(g.clone());
        }
    }
    while !layer.is_empty() {
        let mut next_span = Echelon::new(f, n * n);
        let mut next = Vec::new();
        for g in &gens {
            for t in &layer {
                let c = g.commutator(t).expect("same order");
                if next_span.insert_dense(&c.flatten_col_major()).expect("length n²") {
                    next.push(c);
                }
            }
        }
        let before = total.rank();
        for c in &next {
            total.insert_dense(&c.flatten_col_major()).expect("length n²");
        }
        if total.rank() == before {
            break;
        }
        layer = next;
    }
    SubspaceBasis::from_vectors(f, n * n, total.dense_rows()).expect("length n²")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDerivations {
    /// `Der(A) ∩ 𝒯(A)`, flattened column-major.
    pub space: SubspaceBasis,
    pub der_dim: usize,
    pub lie_dim: usize,
    pub inner_dim: usize,
    pub outer_dim: usize,
}

pub fn inner_derivations(q: &Quandle, f: FieldSpec) -> InnerDerivations {
    let n = q.order();
    let der = derivation_space(q, f);
    let der_cols =
        SubspaceBasis::from_vectors(f, n * n, der.basis().iter().map(LinearMap::flatten_col_major)).expect("length n²");
    let lie = lie_transformation_algebra(q, f).basis();
    let space = span_intersect(&der_cols, &lie).expect("same ambient space");
    InnerDerivations {
        der_dim: der.dim(),
        lie_dim: lie.dim(),
        inner_dim: space.dim(),
        outer_dim: der.dim() - space.dim(),
        space,
    }
}

/// Span of all products of the given operators (including the empty product
/// `id`), i.e. the unital associative algebra they generate.
fn unital_algebra(gens: &[LinearMap], f: FieldSpec, n: usize) -> Vec<LinearMap> {
    let mut span = Echelon::new(f, n * n);
    let mut words = vec![LinearMap::identity(f, n)];
    span.insert_dense(&words[0].flatten_col_major()).expect("length n²");
    let mut i = 0;
    while i < words.len() {
        for g in gens {
            let w = g.compose(&words[i]).expect("same order");
            if span.insert_dense(&w.flatten_col_major()).expect("length n²") {
                words.push(w);
            }
        }
        i += 1;
    }
    words
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrBound {
    /// `ℒℛ(A)`, the span of (products of `L`s)·(products of `R`s).
    pub space: SubspaceBasis,
    pub lie_dim: usize,
    pub contains_lie: bool,
    pub strict: bool,
}

/// `ℒℛ(A) = Σ_{m,n} L^m(A)·R^n(A)`. Both word families are grown until their
/// spans stop changing, so no word-length cap is needed.
pub fn lr_form_bound(q: &Quandle, f: FieldSpec) -> LrBound {
    let n = q.order();
    let ls: Vec<LinearMap> = (0..n).map(|x| left_mult(x, q, f).expect("x < n")).collect();
    let rs: Vec<LinearMap> = (0..n).map(|x| right_mult(x, q, f).expect("x < n")).collect();
    let l_alg = unital_algebra(&ls, f, n);
    let r_alg = unital_algebra(&rs, f, n);
    let mut span = Echelon::new(f, n * n);
    for a in &l_alg {
        for b in &r_alg {
            span.insert_dense(&a.compose(b).expect("same order").flatten_col_major())
                .expect("length n²");
        }
    }
    let space = SubspaceBasis::from_vectors(f, n * n, span.dense_rows()).expect("length n²");
    let lie = lie_transformation_algebra(q, f).basis();
    let contains_lie = lie.is_subspace_of(&space).expect("same ambient space");
    LrBound {
        strict: contains_lie && lie.dim() < space.dim(),
        lie_dim: lie.dim(),
        contains_lie,
        space,
    }
}

/// Distinct powers `A^0, A^1, ...` up to the first repeat.
fn distinct_powers(a: &LinearMap) -> Vec<LinearMap> {
    let mut powers = vec![LinearMap::identity(a.field(), a.order())];
    loop {
        let next = a.compose(powers.last().expect("non-empty")).expect("same order");
        if powers.contains(&next) {
            return powers;
        }
        powers.push(next);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderVerdict {
    /// Span of `L_f L_0^a R_0^b` and `R_g L_0^a R_0^b`.
    pub form: SubspaceBasis,
    pub lie_dim: usize,
    /// Accepted `𝒯(A)` operators (in closure order) outside the form span.
    pub outside: Vec<usize>,
}

impl AlexanderVerdict {
    pub fn holds(&self) -> bool {
        self.outside.is_empty()
    }
}

pub fn alexander_canonical_form(q: &Quandle, f: FieldSpec) -> Result<AlexanderVerdict, LieError> {
    q.alexander_params().ok_or(LieError::NotAlexander)?;
    let n = q.order();
    let l0_powers = distinct_powers(&left_mult(0, q, f)?);
    let r0_powers = distinct_powers(&right_mult(0, q, f)?);
    let mut span = Echelon::new(f, n * n);
    for a in &l0_powers {
        for b in &r0_powers {
            let tail = a.compose(b)?;
            for x in 0..n {
                for head in [left_mult(x, q, f)?, right_mult(x, q, f)?] {
                    span.insert_dense(&head.compose(&tail)?.flatten_col_major())?;
                }
            }
        }
    }
    let lie = lie_transformation_algebra(q, f);
    let outside = lie
        .operators()
        .iter()
        .enumerate()
        .filter(|(_, op)| span.coordinates(&op.flatten_col_major()).is_none())
        .map(|(i, _)| i)
        .collect();
    Ok(AlexanderVerdict {
        form: SubspaceBasis::from_vectors(f, n * n, span.dense_rows())?,
        lie_dim: lie.dim(),
        outside,
    })
}

/// The first `x` with `[L_x, R_x] ≠ 0`, if any.
pub fn first_noncommuting_lr(q: &Quandle, f: FieldSpec) -> Option<usize> {
    (0..q.order()).find(|&x| {
        let l = left_mult(x, q, f).expect("x < n");
        let r = right_mult(x, q, f).expect("x < n");
        !l.commutator(&r).expect("same order").is_zero()
    })
}

/// Whether `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0`.
pub fn jacobi_holds(a: &LinearMap, b: &LinearMap, c: &LinearMap) -> Result<bool, LieError> {
    let t1 = a.commutator(b)?.commutator(c)?;
    let t2 = b.commutator(c)?.commutator(a)?;
    let t3 = c.commutator(a)?.commutator(b)?;
    Ok(t1.add(&t2)?.add(&t3)?.is_zero())
}
