//! Rendering of command results as JSON, CSV or an aligned table.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Dotted keys for nested objects; arrays of scalars stay inline.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push((prefix.to_string(), leaf(other))),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows for CSV: an explicit `columns`/`rows` grid, else one row per
/// orbit point, else key/value pairs.
fn csv(v: &Value) -> String {
    let mut out = String::new();
    if let (Some(cols), Some(rows)) = (v.get("columns").and_then(Value::as_array), v.get("rows").and_then(Value::as_array)) {
        out.push_str(&cols.iter().map(|c| csv_field(&leaf(c))).collect::<Vec<_>>().join(","));
        out.push('\n');
        for r in rows {
            let cells: Vec<String> = r.as_array().map(|a| a.iter().map(|x| csv_field(&leaf(x))).collect()).unwrap_or_default();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        return out;
    }
    if let Some(points) = v.get("points").and_then(Value::as_array) {
        let width = points.iter().filter_map(Value::as_array).map(Vec::len).max();
        match width {
            Some(n) if points.iter().all(Value::is_array) => {
                let names: Vec<String> = match n {
                    3 => ["x", "y", "z"].map(String::from).to_vec(),
                    4 => (1..=4).map(|i| format!("p{i}")).collect(),
                    _ => (1..=n).map(|i| format!("v{i}")).collect(),
                };
                out.push_str(&format!("index,{}\n", names.join(",")));
                for (i, p) in points.iter().enumerate() {
                    let cells: Vec<String> = p.as_array().into_iter().flatten().map(|x| csv_field(&leaf(x))).collect();
                    out.push_str(&format!("{i},{}\n", cells.join(",")));
                }
            }
            _ => {
                out.push_str("index,point\n");
                for (i, p) in points.iter().enumerate() {
                    out.push_str(&format!("{i},{}\n", csv_field(&leaf(p))));
                }
            }
        }
        return out;
    }
    let mut pairs = Vec::new();
    flatten("", v, &mut pairs);
    out.push_str("key,value\n");
    for (k, x) in pairs {
        out.push_str(&format!("{},{}\n", csv_field(&k), csv_field(&x)));
    }
    out
}

fn table(v: &Value) -> String {
    let mut pairs = Vec::new();
    flatten("", v, &mut pairs);
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, x)| format!("{k:<w$}  {x}\n")).collect()
}

pub fn render(v: &Value, f: Format) -> String {
    match f {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Format::Csv => csv(v),
        Format::Table => table(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn formats() {
        let v = json!({"mode": "exact", "p": ["1", "1"], "nested": {"a": 1}});
        let t = render(&v, Format::Table);
        assert!(t.contains("nested.a"));
        let c = render(&v, Format::Csv);
        assert!(c.starts_with("key,value\n"));
        assert!(c.contains("p,\"[\"\"1\"\",\"\"1\"\"]\""));
        let grid = json!({"columns": ["b", "c"], "rows": [[1, 2], [3, 4]]});
        assert_eq!(render(&grid, Format::Csv), "b,c\n1,2\n3,4\n");
        let orbit = json!({"points": [["0", "1", "0"], ["1", "0", "0"]]});
        assert_eq!(render(&orbit, Format::Csv), "index,x,y,z\n0,0,1,0\n1,1,0,0\n");
        let back: Value = serde_json::from_str(&render(&v, Format::Json)).unwrap();
        assert_eq!(back, v);
    }
}
