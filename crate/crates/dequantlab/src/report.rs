//! Command reports: one JSON payload, rendered either as JSON or as text.
//!
//! The text form is derived mechanically from the payload. Nested keys are
//! joined with dots, arrays of scalars are comma-joined, and arrays of flat
//! objects become aligned tables.

use serde_json::{Map, Value};

/// Exit code for a successful command.
pub const EXIT_OK: i32 = 0;
/// Promise violated, entanglement where separability was required, or a
/// failed verification.
pub const EXIT_FAILURE: i32 = 1;
/// Bad arguments or unsupported request.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub payload: Map<String, Value>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            payload: Map::new(),
            exit_code: EXIT_OK,
        }
    }

    pub fn error(command: impl Into<String>, exit_code: i32, message: impl Into<String>) -> Self {
        let mut r = Report::new(command);
        r.exit_code = exit_code;
        r.insert("status", "error");
        r.insert("error", message.into());
        r
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) {
        self.payload.insert(key.to_owned(), value.into());
    }

    pub fn is_error(&self) -> bool {
        self.payload.get("status").and_then(Value::as_str) == Some("error")
    }

    /// The full object: command echo, exit code, then the payload.
    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.clone()));
        obj.insert("exit_code".into(), Value::from(self.exit_code));
        obj.extend(self.payload.clone());
        Value::Object(obj)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Text => self.render_text(),
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report values are serialisable")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        render_object(&mut out, "", &self.to_value());
        out
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Arrays of objects whose values are all scalars, sharing one key set.
fn table_columns(items: &[Value]) -> Option<Vec<String>> {
    let first = items.first()?.as_object()?;
    let columns: Vec<String> = first.keys().cloned().collect();
    let uniform = items.iter().all(|item| {
        item.as_object().is_some_and(|o| {
            o.len() == columns.len()
                && columns.iter().all(|c| {
                    o.get(c).is_some_and(|v| {
                        is_scalar(v) && !scalar_text(v).contains(char::is_whitespace)
                    })
                })
        })
    });
    uniform.then_some(columns)
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_owned()
    } else {
        format!("{prefix}.{key}")
    }
}

fn render_object(out: &mut String, prefix: &str, v: &Value) {
    let Some(obj) = v.as_object() else {
        out.push_str(&format!("{prefix}: {}\n", scalar_text(v)));
        return;
    };
    for (key, value) in obj {
        let path = join(prefix, key);
        match value {
            Value::Object(_) => render_object(out, &path, value),
            Value::Array(items) if items.iter().all(is_scalar) => {
                let joined: Vec<String> = items.iter().map(scalar_text).collect();
                out.push_str(&format!("{path}: [{}]\n", joined.join(", ")));
            }
            Value::Array(items) => match table_columns(items) {
                Some(columns) => render_table(out, &path, &columns, items),
                None => {
                    for (i, item) in items.iter().enumerate() {
                        let p = format!("{path}[{i}]");
                        if is_scalar(item) {
                            out.push_str(&format!("{p}: {}\n", scalar_text(item)));
                        } else if let Value::Array(inner) = item {
                            let joined: Vec<String> = inner.iter().map(scalar_text).collect();
                            out.push_str(&format!("{p}: [{}]\n", joined.join(", ")));
                        } else {
                            render_object(out, &p, item);
                        }
                    }
                }
            },
            _ => out.push_str(&format!("{path}: {}\n", scalar_text(value))),
        }
    }
}

fn render_table(out: &mut String, path: &str, columns: &[String], items: &[Value]) {
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| columns.iter().map(|c| scalar_text(&item[c])).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(k, c)| {
            cells
                .iter()
                .map(|row| row[k].len())
                .fold(c.len(), usize::max)
        })
        .collect();
    let line = |row: &[String]| {
        let padded: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        format!("  {}\n", padded.join("  "))
    };
    out.push_str(&format!("{path}:\n"));
    out.push_str(&line(columns));
    for row in &cells {
        out.push_str(&line(row));
    }
}

/// `(path, text)` pairs of every leaf, in rendering order. Matches what
/// [`parse_text`] recovers from [`Report::render_text`].
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten_into(&mut out, "", v);
    out
}

fn flatten_into(out: &mut Vec<(String, String)>, prefix: &str, v: &Value) {
    let Some(obj) = v.as_object() else {
        out.push((prefix.to_owned(), scalar_text(v)));
        return;
    };
    for (key, value) in obj {
        let path = join(prefix, key);
        match value {
            Value::Object(_) => flatten_into(out, &path, value),
            Value::Array(items) if items.iter().all(is_scalar) => {
                let joined: Vec<String> = items.iter().map(scalar_text).collect();
                out.push((path, format!("[{}]", joined.join(", "))));
            }
            Value::Array(items) => match table_columns(items) {
                Some(columns) => {
                    for (i, item) in items.iter().enumerate() {
                        for c in &columns {
                            out.push((format!("{path}[{i}].{c}"), scalar_text(&item[c])));
                        }
                    }
                }
                None => {
                    for (i, item) in items.iter().enumerate() {
                        let p = format!("{path}[{i}]");
                        if let Value::Array(inner) = item {
                            let joined: Vec<String> = inner.iter().map(scalar_text).collect();
                            out.push((p, format!("[{}]", joined.join(", "))));
                        } else {
                            flatten_into(out, &p, item);
                        }
                    }
                }
            },
            _ => out.push((path, scalar_text(value))),
        }
    }
}

/// Reads the text rendering back into `(path, text)` pairs.
pub fn parse_text(text: &str) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut lines = text.lines().peekable();
    while let Some(line) = lines.next() {
        if let Some(path) = line.strip_suffix(':').filter(|_| !line.starts_with(' ')) {
            let header: Vec<&str> = lines
                .next()
                .map(|h| h.split_whitespace().collect())
                .unwrap_or_default();
            let mut row = 0;
            while let Some(next) = lines.next_if(|l| l.starts_with("  ")) {
                for (c, cell) in header.iter().zip(next.split_whitespace()) {
                    out.push((format!("{path}[{row}].{c}"), cell.to_owned()));
                }
                row += 1;
            }
        } else if let Some((path, value)) = line.split_once(": ") {
            out.push((path.to_owned(), value.to_owned()));
        }
    }
    out
}
