use std::collections::BTreeMap;
use std::time::Instant;

use regsemi::semigroup::format_cay;
use regsemi::Semigroup;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub const TOOL: Tool = Tool {
    name: "regsemi",
    version: env!("CARGO_PKG_VERSION"),
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDescriptor {
    /// `file:<path>`, `family:<name(params)>` or `corpus:<index>`.
    pub source: String,
    pub order: usize,
    /// SHA-256 of the canonical `.cay` serialization.
    pub sha256: String,
}

impl InputDescriptor {
    pub fn new(source: String, s: &Semigroup) -> Self {
        InputDescriptor {
            source,
            order: s.order(),
            sha256: content_hash(s),
        }
    }
}

pub fn content_hash(s: &Semigroup) -> String {
    hex::encode(Sha256::digest(format_cay(s).as_bytes()))
}

/// Wall time per stage. Serialized last in every report so that the rest of
/// the line is reproducible byte for byte.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings(BTreeMap<String, u64>);

impl Timings {
    pub fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_millis() as u64;
        *self.0.entry(stage.to_string()).or_insert(0) += ms;
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: Tool,
    pub input: InputDescriptor,
    pub results: T,
    pub timing_ms: Timings,
}

/// Removes the trailing `"timing_ms"` member from one serialized report.
pub fn strip_timing(line: &str) -> &str {
    match line.rfind(",\"timing_ms\":") {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Flattens a JSON value into `path: value` lines; long arrays are summarized.
pub fn render_human(value: &serde_json::Value) -> String {
    fn go(prefix: &str, v: &serde_json::Value, out: &mut String) {
        use serde_json::Value;
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    go(&p, x, out);
                }
            }
            Value::Array(items) if items.len() > 12 => {
                out.push_str(&format!("{prefix}: [{} items]\n", items.len()));
            }
            other => out.push_str(&format!("{prefix}: {other}\n")),
        }
    }
    let mut out = String::new();
    go("", value, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use regsemi::Family;

    #[test]
    fn hash_is_stable() {
        let s = Family::Brandt(2).generate_default().unwrap();
        assert_eq!(content_hash(&s), content_hash(&s.clone()));
        assert_eq!(content_hash(&s).len(), 64);
        let t = Family::ChainSemilattice(5).generate_default().unwrap();
        assert_ne!(content_hash(&s), content_hash(&t));
    }

    #[test]
    fn timing_is_stripped() {
        let r = Report {
            tool: TOOL,
            input: InputDescriptor {
                source: "x".into(),
                order: 1,
                sha256: String::new(),
            },
            results: 1,
            timing_ms: Timings::default(),
        };
        let line = serde_json::to_string(&r).unwrap();
        assert!(strip_timing(&line).ends_with("\"results\":1"));
    }

    #[test]
    fn human_rendering() {
        let v = serde_json::json!({"a": {"b": true}, "c": [1, 2]});
        assert_eq!(render_human(&v), "a.b: true\nc: [1,2]\n");
    }
}
