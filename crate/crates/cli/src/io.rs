use std::io::Write;
use std::path::Path;

use crate::error::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `text` plus a trailing newline to `path`, or to stdout when `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
                    path: "<stdout>".into(),
                    source: e,
                }),
                _ => Ok(()),
            }
        }
    }
}

/// JSON object with one member per line and each member value compact, so
/// bands and matrix rows each take a single line.
pub fn json_lines(value: &impl serde::Serialize) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let serde_json::Value::Object(map) = value else {
        return value.to_string();
    };
    let members: Vec<String> = map
        .iter()
        .map(|(key, v)| {
            let body = match v {
                serde_json::Value::Array(rows) if rows.iter().all(|r| r.is_array()) && !rows.is_empty() => {
                    let rows: Vec<String> = rows.iter().map(|r| format!("    {r}")).collect();
                    format!("[\n{}\n  ]", rows.join(",\n"))
                }
                other => other.to_string(),
            };
            format!("  {}: {body}", serde_json::Value::String(key.clone()))
        })
        .collect();
    format!("{{\n{}\n}}", members.join(",\n"))
}
