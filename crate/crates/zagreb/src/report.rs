//! The JSON record every command prints, and its plain-text view.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        Report { command: command.to_owned(), inputs, result, warnings: Vec::new() }
    }

    pub fn with_warnings(mut self, warnings: impl IntoIterator<Item = String>) -> Self {
        self.warnings.extend(warnings);
        self
    }

    /// Compact single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Indented `key: value` lines. Arrays of flat objects become tables.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        out.push_str("inputs:\n");
        render(&self.inputs, 1, &mut out);
        out.push_str("result:\n");
        render(&self.result, 1, &mut out);
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            Some(format!("[{}]", items.iter().map(|i| scalar(i).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            if let Some(table) = table(items, &pad) {
                out.push_str(&table);
            } else {
                for item in items {
                    out.push_str(&format!("{pad}-\n"));
                    render(item, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn table(items: &[Value], pad: &str) -> Option<String> {
    let first = items.first()?.as_object()?;
    let keys: Vec<&String> = first.keys().collect();
    let mut rows = vec![keys.iter().map(|k| k.to_string()).collect::<Vec<_>>()];
    for item in items {
        let obj = item.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        let row = keys.iter().map(|k| obj.get(*k).and_then(scalar)).collect::<Option<Vec<_>>>()?;
        rows.push(row);
    }
    let widths: Vec<usize> = (0..keys.len()).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(pad);
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    Some(out)
}
