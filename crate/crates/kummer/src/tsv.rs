//! Tab-separated rendering of command output.
//!
//! A top-level object becomes one `key<TAB>value` line per key. Scalars are
//! written bare, arrays of scalars comma-joined, and anything nested as
//! compact JSON. A top-level array of objects becomes a table whose header
//! is the union of keys.

use std::collections::BTreeSet;

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        _ => v.to_string(),
    }
}

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                out.push_str(k);
                out.push('\t');
                out.push_str(&cell(x));
                out.push('\n');
            }
        }
        Value::Array(rows) if rows.iter().all(Value::is_object) => {
            let keys: BTreeSet<&String> = rows.iter().flat_map(|r| r.as_object().unwrap().keys()).collect();
            out.push_str(&keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t"));
            out.push('\n');
            for r in rows {
                let line: Vec<String> = keys.iter().map(|k| r.get(k.as_str()).map(cell).unwrap_or_default()).collect();
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
    out
}
