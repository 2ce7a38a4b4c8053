//! Deterministic text serialization.

/// Shortest round-trip decimal form: plain notation for `1e-5 <= |v| < 1e16`
/// (and zero), exponent notation otherwise.
pub fn fmt_f64(v: f64) -> String {
    let m = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&m) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// CSV with a header row and LF line endings.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn json_pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}
