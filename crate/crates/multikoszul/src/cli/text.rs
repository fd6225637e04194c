use std::fmt::Write;

use serde_json::Value;

const TABLES: [&str; 4] = ["jdims", "tor", "bar", "resolution"];

/// Dimension grid: rows are homological degrees, columns Adams degrees.
/// `-` marks a structurally zero cell, `.` a computed zero and `*` the witness.
pub fn grid(table: &Value, bounds: (usize, usize), lower: Option<&[usize]>, witness: Option<(usize, usize)>) -> String {
    let (h, d) = bounds;
    let cell = |i: usize, n: usize| -> String {
        let v = table.get(i.to_string()).and_then(|r| r.get(n.to_string())).and_then(Value::as_u64).unwrap_or(0);
        let mut s = if v > 0 {
            v.to_string()
        } else if lower.is_some_and(|l| l.get(i).is_some_and(|&b| n < b)) {
            "-".into()
        } else {
            ".".into()
        };
        if witness == Some((i, n)) {
            s.push('*');
        }
        s
    };
    let width = (0..=h).flat_map(|i| (0..=d).map(move |n| (i, n))).map(|(i, n)| cell(i, n).len()).max().unwrap_or(1).max(d.to_string().len());
    let mut out = String::new();
    write!(out, "{:>4}", "i\\n").unwrap();
    for n in 0..=d {
        write!(out, " {n:>width$}").unwrap();
    }
    out.push('\n');
    for i in 0..=h {
        write!(out, "{i:>4}").unwrap();
        for n in 0..=d {
            write!(out, " {:>width$}", cell(i, n)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn pair(v: &Value) -> Option<(usize, usize)> {
    let a = v.as_array()?;
    Some((a.first()?.as_u64()? as usize, a.get(1)?.as_u64()? as usize))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Plain-text rendering of a report.
pub fn render(report: &Value) -> String {
    let mut out = String::new();
    let Some(obj) = report.as_object() else { return report.to_string() };
    if let Some(cmd) = obj.get("command") {
        writeln!(out, "command: {}", scalar(cmd)).unwrap();
    }
    if let Some(p) = obj.get("presentation") {
        writeln!(out, "field: {}", scalar(&p["field"])).unwrap();
        if let Some(g) = p["gens"].as_array() {
            let gens: Vec<String> = g.iter().filter_map(|x| Some(format!("{}:{}", x.get(0)?.as_str()?, x.get(1)?))).collect();
            writeln!(out, "gens: {}", gens.join(", ")).unwrap();
        }
        if let Some(r) = p["relations"].as_array() {
            for x in r {
                writeln!(out, "rel: {}", scalar(x)).unwrap();
            }
        }
    }
    let bounds = obj.get("bounds").and_then(pair);
    if let Some((h, d)) = bounds {
        writeln!(out, "bounds: H = {h}, D = {d}").unwrap();
    }
    if let Some(v) = obj.get("verdict") {
        writeln!(out, "verdict: {}", scalar(v)).unwrap();
    }
    let witness = obj.get("witness").and_then(pair);
    if let Some((i, n)) = witness {
        writeln!(out, "witness: (i, n) = ({i}, {n})").unwrap();
    }
    if let Some(hs) = obj.get("hilbert").and_then(Value::as_array) {
        let xs: Vec<String> = hs.iter().map(|x| x.to_string()).collect();
        writeln!(out, "hilbert: {}", xs.join(" ")).unwrap();
    }
    let lower: Option<Vec<usize>> =
        obj.get("structural_zero_below").and_then(Value::as_array).map(|a| a.iter().filter_map(|x| x.as_u64().map(|y| y as usize)).collect());
    if let Some(b) = bounds {
        for key in TABLES {
            if let Some(t) = obj.get(key).filter(|t| t.is_object()) {
                let marks = if key == "jdims" { lower.as_deref() } else { None };
                writeln!(out, "\n{key}:").unwrap();
                out.push_str(&grid(t, b, marks, witness));
            }
        }
    }
    for (k, v) in obj {
        let skip = TABLES.contains(&k.as_str())
            || ["command", "presentation", "bounds", "verdict", "witness", "hilbert", "structural_zero_below", "notes", "schema"].contains(&k.as_str());
        if skip {
            continue;
        }
        match v {
            Value::Bool(_) | Value::Number(_) | Value::String(_) => writeln!(out, "{k}: {}", scalar(v)).unwrap(),
            Value::Object(m) if m.contains_key("ok") => writeln!(out, "{k}: ok = {}", m["ok"]).unwrap(),
            Value::Object(m) if m.contains_key("equal") => writeln!(out, "{k}: equal = {}", m["equal"]).unwrap(),
            Value::Object(m) if k == "algebras" => {
                for (name, e) in m {
                    let failed: Vec<&String> = e["checks"].as_object().map(|c| c.iter().filter(|(_, x)| x == &&Value::Bool(false)).map(|(n, _)| n).collect()).unwrap_or_default();
                    let status = if failed.is_empty() { "PASS".to_string() } else { format!("FAIL {failed:?}") };
                    writeln!(out, "{name:<10} {:<26} {status}", scalar(&e["verdict"])).unwrap();
                }
            }
            Value::Object(m) => writeln!(out, "{k}: {} entries (see --format json)", m.len()).unwrap(),
            Value::Array(a) if a.len() <= 4 && a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let xs: Vec<String> = a.iter().map(scalar).collect();
                writeln!(out, "{k}: {}", xs.join(", ")).unwrap()
            }
            Value::Array(a) => writeln!(out, "{k}: {} entries", a.len()).unwrap(),
            Value::Null => {}
        }
    }
    if let Some(notes) = obj.get("notes").and_then(Value::as_array) {
        for n in notes {
            writeln!(out, "note: {}", scalar(n)).unwrap();
        }
    }
    out
}
