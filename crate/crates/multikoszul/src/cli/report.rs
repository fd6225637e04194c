use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{Common, SuiteReport};
use crate::jspaces::{compute_j_with, JBasis, JFamily, JOptions};
use crate::komplex::{bar_tor_oracle, decide_with, minimal_resolution, DecideOptions, DegreeMatrix, Status};
use crate::presentation::{Presentation, TruncatedAlgebra};
use crate::yoneda::{ainf_coproducts, hypothesis, twisted_complex_check, yoneda_products};
use crate::Error;

fn header(p: &Presentation, c: &Common, command: &str) -> Value {
    json!({
        "schema": 1,
        "command": command,
        "presentation": p.echo(),
        "bounds": [c.hdeg, c.adeg],
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn jfamily(a: &TruncatedAlgebra, c: &Common) -> Result<JFamily, Error> {
    compute_j_with(a, c.hdeg, JOptions { debug_crosscheck: c.debug_crosscheck, ..JOptions::default() })
}

fn basis_dump(p: &Presentation, j: &JFamily) -> Value {
    let space = j.space();
    let mut out = Map::new();
    for i in 0..=j.hmax() {
        let mut row = Map::new();
        for n in j.get(i).degrees() {
            let polys: Vec<String> = j.get(i).basis_polys(space, n).iter().map(|q| q.display(&p.gens)).collect();
            row.insert(n.to_string(), json!(polys));
        }
        out.insert(i.to_string(), Value::Object(row));
    }
    Value::Object(out)
}

fn lower(j: &JFamily) -> Vec<usize> {
    (0..=j.hmax()).map(|i| j.lower_bound(i)).collect()
}

pub fn hilbert(p: &Presentation, c: &Common) -> Result<Value, Error> {
    let a = TruncatedAlgebra::new(p, c.adeg)?;
    Ok(merge(header(p, c, "hilbert"), json!({ "hilbert": a.hilbert_series(), "notes": a.warnings() })))
}

pub fn jspaces(p: &Presentation, c: &Common) -> Result<Value, Error> {
    let a = TruncatedAlgebra::new(p, c.adeg)?;
    let j = jfamily(&a, c)?;
    let mut notes = a.warnings().to_vec();
    notes.extend(j.notes().iter().cloned());
    let mut v = json!({
        "jdims": j.table().to_json(),
        "structural_zero_below": lower(&j),
        "notes": notes,
    });
    if c.basis_dump {
        v["basis"] = basis_dump(p, &j);
    }
    Ok(merge(header(p, c, "jspaces"), v))
}

pub fn tor(p: &Presentation, c: &Common) -> Result<Value, Error> {
    let a = TruncatedAlgebra::new(p, c.adeg)?;
    let res = minimal_resolution(&a, c.hdeg);
    Ok(merge(
        header(p, c, "tor"),
        json!({ "tor": res.tor_table().to_json(), "minimal": res.is_minimal(&a), "complex": res.is_complex() }),
    ))
}

pub fn oracle(p: &Presentation, c: &Common, (h, d): (usize, usize)) -> Result<Value, Error> {
    let a = TruncatedAlgebra::new(p, d)?;
    let bar = bar_tor_oracle(&a, h)?;
    let res = minimal_resolution(&a, h).tor_table();
    Ok(merge(
        header(p, c, "oracle"),
        json!({
            "bounds": [h, d],
            "bar": bar.to_json(),
            "resolution": res.to_json(),
            "agree": bar == res,
        }),
    ))
}

/// The verdict report and the exit status it implies.
pub fn check(p: &Presentation, c: &Common, expect_koszul: bool) -> Result<(Value, i32), Error> {
    let v = decide_with(p, c.hdeg, c.adeg, DecideOptions { debug_crosscheck: c.debug_crosscheck })?;
    let code = match &v.status {
        Status::InconclusiveCap { .. } => 3,
        Status::NotMultiKoszul { .. } if expect_koszul => 1,
        _ => 0,
    };
    let mut out = merge(header(p, c, "check"), v.to_json());
    if let Status::InconclusiveCap { reason } = &v.status {
        out["cap"] = json!(reason);
    }
    if c.basis_dump && !matches!(v.status, Status::InconclusiveCap { .. }) {
        let a = TruncatedAlgebra::new(p, c.adeg)?;
        out["basis"] = basis_dump(p, &jfamily(&a, c)?);
    }
    Ok((out, code))
}

/// Runs the decision procedure and applies the hypothesis gate.
fn gated(p: &Presentation, c: &Common, formal: bool) -> Result<(TruncatedAlgebra, JFamily, Value), Error> {
    let v = decide_with(p, c.hdeg, c.adeg, DecideOptions::default())?;
    if let Status::InconclusiveCap { reason } = &v.status {
        return Err(Error::Cap(reason.clone()));
    }
    let note = hypothesis(&v, formal)?;
    let a = TruncatedAlgebra::new(p, c.adeg)?;
    let j = jfamily(&a, c)?;
    let mut notes: Vec<String> = note.iter().map(|s| s.to_string()).collect();
    notes.extend(v.notes.iter().cloned());
    let base = json!({ "verdict": v.status.label(), "formal": note.is_some(), "notes": notes });
    Ok((a, j, base))
}

fn matrix_json(m: &DegreeMatrix) -> Value {
    let zero = "0".to_string();
    let mut rows = vec![vec![zero; m.columns.len()]; m.rows];
    for (k, col) in m.columns.iter().enumerate() {
        for (r, x) in col.iter() {
            rows[*r][k] = x.to_string();
        }
    }
    json!(rows)
}

fn basis_key(b: &JBasis) -> String {
    format!("{},{},{}", b.i, b.degree, b.index)
}

pub fn yoneda(p: &Presentation, c: &Common, formal: bool) -> Result<Value, Error> {
    let (_, j, base) = gated(p, c, formal)?;
    let mut t = yoneda_products(&j, c.hdeg)?;
    t.formal = base["formal"].as_bool().unwrap_or(false);
    let mut products = Map::new();
    for ((i, i2), mats) in &t.blocks {
        let mut inner = Map::new();
        for ((n, n2), m) in mats {
            if m.rows > 0 && !m.columns.is_empty() {
                inner.insert(format!("{n},{n2}"), matrix_json(m));
            }
        }
        if !inner.is_empty() {
            products.insert(format!("{i},{i2}"), Value::Object(inner));
        }
    }
    let k2 = t.k2_check(c.hdeg);
    let v = json!({
        "products": products,
        "k2": { "ok": k2.ok(), "i_max": k2.i_max, "failures": k2.failures },
        "associative": t.associativity_failures().is_empty(),
        "unital": t.unit_ok(),
        "bidegree_ok": t.bidegree_ok(),
    });
    Ok(merge(merge(header(p, c, "yoneda"), base), v))
}

pub fn ainfty(p: &Presentation, c: &Common, n_max: usize, formal: bool) -> Result<Value, Error> {
    if n_max < 2 {
        return Err(Error::Input("--nmax must be at least 2".into()));
    }
    let (a, j, base) = gated(p, c, formal)?;
    let s = ainf_coproducts(&j, n_max)?;
    let stasheff = s.check_stasheff();
    let twisted = twisted_complex_check(&s, &a, &j)?;
    let mut coproducts = Map::new();
    for (n, d) in &s.coproducts {
        let mut images: BTreeMap<String, Value> = BTreeMap::new();
        for (b, t) in d {
            if t.is_empty() {
                continue;
            }
            let terms: Vec<Value> = t
                .iter()
                .map(|(k, x)| json!([x.to_string(), k.iter().map(|y| [y.i, y.degree, y.index]).collect::<Vec<_>>()]))
                .collect();
            images.insert(basis_key(b), json!(terms));
        }
        coproducts.insert(n.to_string(), json!(images));
    }
    let v = json!({
        "n_max": n_max,
        "coproducts": coproducts,
        "stasheff": stasheff,
        "twisted": twisted,
        "counit_ok": s.counit_failures().is_empty(),
        "coaugmentation_ok": s.coaugmentation_ok(),
        "bidegree_ok": s.bidegree_ok(),
    });
    Ok(merge(merge(header(p, c, "ainfty"), base), v))
}

pub fn suite(r: &SuiteReport) -> Value {
    json!({
        "schema": 1,
        "command": "corpus",
        "bounds": [r.bounds.0, r.bounds.1],
        "oracle_bounds": [r.oracle_bounds.0, r.oracle_bounds.1],
        "ok": r.ok(),
        "algebras": r.entries,
    })
}
