//! Plain-text table rendering for `--format table`.

use serde_json::Value;

/// Renders a JSON payload as indented `key: value` lines; arrays of objects
/// become aligned column tables.
pub fn render(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn pad(indent: usize, out: &mut String) {
    for _ in 0..indent {
        out.push(' ');
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                pad(indent, out);
                match v {
                    Value::Object(_) | Value::Array(_) if !is_scalar_array(v) => {
                        out.push_str(key);
                        out.push_str(":\n");
                        render_into(v, indent + 2, out);
                    }
                    _ => {
                        out.push_str(&format!("{key}: {}\n", flat(v)));
                    }
                }
            }
        }
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            render_rows(items, indent, out);
        }
        Value::Array(_) => {
            pad(indent, out);
            out.push_str(&flat(value));
            out.push('\n');
        }
        _ => {
            pad(indent, out);
            out.push_str(&scalar(value));
            out.push('\n');
        }
    }
}

fn is_scalar_array(value: &Value) -> bool {
    matches!(value, Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()))
}

fn flat(value: &Value) -> String {
    match value {
        Value::Array(items) => items
            .iter()
            .map(scalar)
            .collect::<Vec<_>>()
            .join(", "),
        other => scalar(other),
    }
}

fn render_rows(items: &[Value], indent: usize, out: &mut String) {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        if let Value::Object(map) = item {
            for key in map.keys() {
                if !columns.contains(key) {
                    columns.push(key.clone());
                }
            }
        }
    }
    let mut rows: Vec<Vec<String>> = vec![columns.clone()];
    for item in items {
        let row = columns
            .iter()
            .map(|c| item.get(c).map(flat).unwrap_or_default())
            .collect();
        rows.push(row);
    }
    let widths: Vec<usize> = (0..columns.len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in rows {
        pad(indent, out);
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
}
