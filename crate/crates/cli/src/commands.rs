use std::fmt::Write as _;

use serde_json::{json, Value};

use qderiv::derivations::{
    block_decomposition, derivation_space, dihedral_symmetry_report, predicted_dim_dihedral, BlockReport,
};
use qderiv::exactla::{FieldSpec, Matrix};
use qderiv::lietransform::{inner_derivations, lie_transformation_algebra};
use qderiv::qalgebra::{augmentation_ideal, is_left_ideal, is_right_ideal, jx_ideal};
use qderiv::quandle::Quandle;
use qderiv::reference;
use qderiv::report;

use crate::error::CliError;

/// A finished report. `ok` is false when the command ran but found a
/// mismatch, which maps to a nonzero exit.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, ok: true }
    }
}

fn table_text(q: &Quandle) -> String {
    let mut s = String::new();
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    s
}

pub fn validate(q: &Quandle) -> Output {
    let json = json!({ "valid": true, "quandle": report::quandle(q) });
    Output::ok(json, format!("valid quandle of order {}\n", q.order()))
}

pub fn props(q: &Quandle) -> Output {
    let p = q.props();
    let alexander = q
        .alexander_params()
        .map(|a| json!({ "n": a.n(), "alpha": a.alpha(), "beta": a.beta() }));
    let json = json!({
        "quandle": report::quandle(q),
        "props": p,
        "alexander": alexander,
        "dihedral": q.is_dihedral(),
    });
    let mut t = format!("order {}\n", q.order());
    t += &table_text(q);
    let _ = writeln!(
        t,
        "involutive {}\nlatin {}\nmedial {}\nconnected {}\norbits {:?}",
        p.involutive, p.latin, p.medial, p.connected, p.orbits
    );
    if let Some(a) = q.alexander_params() {
        let _ = writeln!(t, "alexander Z_{} with alpha {} beta {}", a.n(), a.alpha(), a.beta());
    }
    Output::ok(json, t)
}

pub fn derivations(q: &Quandle, f: FieldSpec, verbose: bool) -> Output {
    let d = derivation_space(q, f);
    let mut t = format!("dim Der over {f} = {}\n", d.dim());
    if verbose || d.dim() <= 4 {
        for (i, m) in d.basis().iter().enumerate() {
            let _ = write!(t, "D{i}\n{}", m.matrix());
        }
    }
    Output::ok(report::derivations(&d), t)
}

fn blocks_json(b: &BlockReport) -> Value {
    let opt_m = |m: &Matrix| report::matrix(m);
    json!({
        "pm": b.pm.as_ref().map(|(p, holds)| json!({ "p": opt_m(p), "holds": holds })),
        "uv": b.uv.as_ref().map(|(u, v, holds)| json!({ "u": opt_m(u), "v": opt_m(v), "holds": holds })),
        "half_rows_opposite": b.half_rows_opposite,
    })
}

pub fn symmetries(q: &Quandle, f: FieldSpec) -> Result<Output, CliError> {
    if !q.is_dihedral() {
        return Err(CliError::NotDihedral("symmetries"));
    }
    let n = q.order();
    let d = derivation_space(q, f);
    let prediction = predicted_dim_dihedral(n);
    let mut t = format!("dihedral({n}) over {f}: dim {}", d.dim());
    match prediction.value {
        Some(v) => {
            let _ = writeln!(t, ", closed formula gives {v}");
        }
        None => t.push('\n'),
    }
    let mut per_basis = Vec::new();
    for (i, m) in d.basis().iter().enumerate() {
        let rep = dihedral_symmetry_report(m, n)?;
        let blocks = if n.is_multiple_of(2) {
            Some(block_decomposition(m, n)?)
        } else {
            None
        };
        let _ = writeln!(t, "D{i}");
        for r in &rep.relations {
            let status = serde_json::to_value(&r.status).expect("plain data");
            let _ = writeln!(t, "  {:<28} {}", r.formula, status["status"].as_str().unwrap_or("?"));
        }
        per_basis.push(json!({
            "relations": rep.relations,
            "blocks": blocks.as_ref().map(blocks_json),
        }));
    }
    let json = json!({
        "n": n,
        "field": report::field(f),
        "dim": d.dim(),
        "prediction": prediction,
        "basis": per_basis,
    });
    Ok(Output::ok(json, t))
}

pub fn lietransform(q: &Quandle, f: FieldSpec, verbose: bool) -> Output {
    let space = lie_transformation_algebra(q, f);
    let inner = inner_derivations(q, f);
    let mut json = report::lie_transformation(&space, &inner);
    json["log"] = space
        .log()
        .iter()
        .map(|e| json!({ "label": e.label, "dim": e.dim }))
        .collect();
    let mut t = format!(
        "dim T(A) = {}, inner {}, outer {}\n",
        space.dim(),
        inner.inner_dim,
        inner.outer_dim
    );
    for e in space.log() {
        let _ = writeln!(t, "  + {:<12} dim {}", e.label, e.dim);
    }
    if verbose {
        for (e, op) in space.log().iter().zip(space.operators()) {
            let _ = write!(t, "{}\n{}", e.label, op.matrix());
        }
    }
    Output::ok(json, t)
}

pub fn inner(q: &Quandle, f: FieldSpec) -> Output {
    let i = inner_derivations(q, f);
    let json = json!({
        "field": report::field(f),
        "der_dim": i.der_dim,
        "lie_dim": i.lie_dim,
        "inner_dim": i.inner_dim,
        "outer_dim": i.outer_dim,
        "inner_basis": report::subspace(&i.space),
    });
    let t = format!(
        "dim Der {}, dim T(A) {}, inner {}, outer {}\n",
        i.der_dim, i.lie_dim, i.inner_dim, i.outer_dim
    );
    Output::ok(json, t)
}

pub fn ideals(q: &Quandle, f: FieldSpec) -> Output {
    let aug = augmentation_ideal(q, f);
    let jx = jx_ideal(q, f);
    let (right, left) = (is_right_ideal(&jx, q), is_left_ideal(&jx, q));
    let json = json!({
        "field": report::field(f),
        "augmentation_dim": aug.dim(),
        "jx": {
            "dim": jx.dim(),
            "basis": report::subspace(&jx),
            "right_ideal": right,
            "left_ideal": left,
        },
    });
    let t = format!(
        "augmentation ideal dim {}\nJ_X dim {} (right ideal {right}, left ideal {left})\n",
        aug.dim(),
        jx.dim()
    );
    Output::ok(json, t)
}

pub fn tables(verbose: bool) -> Output {
    let entries = reference::load_all().expect("embedded tables parse");
    let comparisons: Vec<_> = entries.iter().map(reference::compare).collect();
    let mut t = String::new();
    let mut rows = Vec::new();
    for c in &comparisons {
        let verdict = if c.passes() { "PASS" } else { "FAIL" };
        let _ = write!(
            t,
            "{verdict} {:<18} stated {:>2} solver {:>2}",
            c.name, c.stated_dim, c.solver_dim
        );
        if verbose || !c.passes() {
            let _ = write!(
                t,
                " params {:>2} contained {} equal {}",
                c.param_rank, c.contained, c.equal
            );
        }
        t.push('\n');
        rows.push(json!({
            "name": c.name,
            "quandle": c.quandle,
            "field": report::field(c.field),
            "stated_dim": c.stated_dim,
            "solver_dim": c.solver_dim,
            "param_rank": c.param_rank,
            "contained": c.contained,
            "equal": c.equal,
            "pass": c.passes(),
        }));
    }
    let passed = comparisons.iter().filter(|c| c.passes()).count();
    let ok = passed == comparisons.len();
    let _ = writeln!(
        t,
        "{} {passed}/{} entries",
        if ok { "PASS" } else { "FAIL" },
        comparisons.len()
    );
    let json = json!({
        "entries": rows,
        "passed": passed,
        "total": comparisons.len(),
        "ok": ok,
    });
    Output { json, text: t, ok }
}
