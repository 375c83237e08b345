//! JSON and TSV rendering of command results.

use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Tsv => tsv(value),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Scalars become `key<TAB>value` lines; arrays of objects become a headed table.
fn tsv(value: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = value else { return cell(value) + "\n" };
    let mut tables = Vec::new();
    for (k, v) in map {
        match v {
            Value::Array(rows) if rows.first().is_some_and(Value::is_object) => tables.push((k, rows)),
            _ => out.push_str(&format!("{k}\t{}\n", cell(v))),
        }
    }
    for (name, rows) in tables {
        let Value::Object(first) = &rows[0] else { continue };
        let cols: Vec<&String> = first.keys().collect();
        out.push_str(&format!("\n# {name}\n"));
        out.push_str(&cols.iter().map(|c| c.as_str()).collect::<Vec<_>>().join("\t"));
        out.push('\n');
        for row in rows {
            let line: Vec<String> = cols.iter().map(|c| row.get(c.as_str()).map(cell).unwrap_or_default()).collect();
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_layout() {
        let v = json!({"a": 1, "rows": [{"x": 1, "y": "s"}, {"x": 2, "y": null}], "b": [1, 2]});
        assert_eq!(render(&v, Format::Tsv), "a\t1\nb\t[1,2]\n\n# rows\nx\ty\n1\ts\n2\t\n");
    }
}
