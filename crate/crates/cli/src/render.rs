use heatcount_core::numfmt::{fmt_sig, round_sig};
use serde_json::{Map, Number, Value};

/// Rounds every non-integer number to the fixed significant-digit count.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().unwrap_or(f64::NAN));
            Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, x)| (k, round_floats(x))).collect()),
        other => other,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => fmt_sig(x),
            _ => n.to_string(),
        },
        Value::Array(a) if a.len() == 2 && a.iter().all(Value::is_number) => {
            let re = a[0].as_f64().unwrap_or(0.0);
            let im = a[1].as_f64().unwrap_or(0.0);
            complex(re, im)
        }
        other => other.to_string(),
    }
}

fn complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        fmt_sig(re)
    } else if re == 0.0 {
        format!("{}i", fmt_sig(im))
    } else if im < 0.0 {
        format!("{}-{}i", fmt_sig(re), fmt_sig(-im))
    } else {
        format!("{}+{}i", fmt_sig(re), fmt_sig(im))
    }
}

fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(header)];
    out.extend(rows.iter().map(|r| line(r)));
    out.join("\n")
}

fn object_rows(items: &[Value]) -> Option<String> {
    let first = items.first()?.as_object()?;
    let keys: Vec<String> = first.keys().cloned().collect();
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|it| keys.iter().map(|k| it.get(k).map(scalar).unwrap_or_default()).collect())
        .collect();
    Some(grid(&keys, &rows))
}

fn character_grid(m: &Map<String, Value>) -> Option<String> {
    let classes = m.get("classes")?.as_array()?;
    let irreps = m.get("irreps")?.as_array()?;
    let mut header = vec!["irrep".to_string(), "dim".to_string(), "FS".to_string()];
    header.extend(classes.iter().map(|c| c.get("label").map(scalar).unwrap_or_default()));
    let mut sizes = vec!["size".to_string(), String::new(), String::new()];
    sizes.extend(classes.iter().map(|c| c.get("size").map(scalar).unwrap_or_default()));
    let mut rows = vec![sizes];
    for r in irreps {
        let mut row = vec![
            r.get("label").map(scalar).unwrap_or_default(),
            r.get("dim").map(scalar).unwrap_or_default(),
            r.get("indicator").map(scalar).unwrap_or_default(),
        ];
        row.extend(r.get("values")?.as_array()?.iter().map(scalar));
        rows.push(row);
    }
    Some(grid(&header, &rows))
}

/// Plain-text rendering: scalar fields as `key: value`, arrays of records as grids.
pub fn table(v: &Value) -> String {
    let Value::Object(m) = v else { return scalar(v) };
    if let Some(g) = character_grid(m) {
        let head: Vec<String> = m
            .iter()
            .filter(|(k, _)| !matches!(k.as_str(), "classes" | "irreps"))
            .map(|(k, x)| format!("{k}: {}", scalar(x)))
            .collect();
        return format!("{}\n\n{g}", head.join("\n"));
    }
    let mut lines = Vec::new();
    let mut blocks = Vec::new();
    for (k, x) in m {
        match x {
            Value::Array(a) if a.iter().any(Value::is_object) => {
                if let Some(g) = object_rows(a) {
                    blocks.push(format!("{k}:\n{g}"));
                }
            }
            Value::Array(a) if !(a.len() == 2 && a.iter().all(Value::is_number)) => {
                lines.push(format!("{k}: {}", a.iter().map(scalar).collect::<Vec<_>>().join(", ")));
            }
            Value::Object(inner) => {
                for (k2, y) in inner {
                    lines.push(format!("{k}.{k2}: {}", scalar(y)));
                }
            }
            _ => lines.push(format!("{k}: {}", scalar(x))),
        }
    }
    let mut out = lines.join("\n");
    for b in blocks {
        out.push_str("\n\n");
        out.push_str(&b);
    }
    out
}
