//! Plain-text rendering of JSON replies: one `key: value` line per top-level
//! field, nested values kept as compact JSON.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn text(v: &Value) -> String {
    match v {
        Value::Object(map) => map.iter().map(|(k, x)| format!("{k}: {}", scalar(x))).collect::<Vec<_>>().join("\n"),
        other => scalar(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flat_objects() {
        assert_eq!(text(&json!({"feasible": true, "m": 0})), "feasible: true\nm: 0");
        assert_eq!(text(&json!({"height": "6"})), "height: 6");
    }
}
