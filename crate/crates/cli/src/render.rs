use serde_json::{json, Value};

use crate::cmd::Doc;

pub const VERSION: &str = "output.v1";

fn document(echo: &str, doc: &Doc) -> Value {
    json!({
        "version": VERSION,
        "command": echo,
        "field": doc.field,
        "result": doc.result,
    })
}

pub fn json(echo: &str, doc: &Doc) -> String {
    let mut s = serde_json::to_string_pretty(&document(echo, doc)).expect("values serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        // polynomials and elements print compactly
        Value::Object(o) if o.contains_key("coeffs") => o.get("coeffs").and_then(scalar),
        Value::Object(o) if o.contains_key("value") && o.contains_key("log") => {
            let val = scalar(&o["value"])?;
            Some(match o["log"].as_u64() {
                Some(l) => format!("{val} (b^{l})"),
                None => val,
            })
        }
        Value::Array(items) => items
            .iter()
            .map(scalar)
            .collect::<Option<Vec<_>>>()
            .map(|v| format!("[{}]", v.join(" "))),
        Value::Object(_) => None,
    }
}

fn rows(out: &mut String, prefix: &str, items: &[Value]) {
    let Some(Value::Object(first)) = items.first() else {
        return;
    };
    let cols: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|it| {
            cols.iter()
                .map(|c| it.get(c.as_str()).and_then(scalar).unwrap_or_else(|| "?".into()))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| r[j].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |vals: Vec<&str>| {
        vals.iter()
            .zip(&widths)
            .map(|(v, w)| format!("{v:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&format!("{prefix}:\n"));
    out.push_str(&format!("  {}\n", line(cols.iter().map(|c| c.as_str()).collect())));
    for r in &cells {
        out.push_str(&format!("  {}\n", line(r.iter().map(|c| c.as_str()).collect())));
    }
}

fn walk(out: &mut String, prefix: &str, v: &Value) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{prefix}: {s}\n"));
        return;
    }
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                walk(out, &key, x);
            }
        }
        Value::Array(items) => rows(out, prefix, items),
        _ => unreachable!("scalars are handled above"),
    }
}

/// Human-readable rendering; only the column names are stable.
pub fn table(echo: &str, doc: &Doc) -> String {
    let mut out = String::new();
    walk(&mut out, "", &document(echo, doc));
    out
}
