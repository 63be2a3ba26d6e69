//! Report rendering. JSON goes through `serde_json::Value`, whose maps are
//! ordered, so keys always come out sorted.

use serde::Serialize;
use serde_json::Value;

use supercohom::{CohomologyReport, SuperDim};

pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports are plain data");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

/// Flattens a report into `path  value` lines with aligned columns.
pub fn to_table(value: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, rows);
            }
        }
        // short arrays of scalars (sdims, coordinates) stay on one line
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let inner: Vec<String> = items.iter().map(scalar).collect();
            rows.push((prefix.to_string(), format!("[{}]", inner.join(", "))));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// A closed-form claim checked against a computed value.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub claim: String,
    pub expected_sdim: SuperDim,
    pub computed_sdim: SuperDim,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Provenance {
    pub fn new(claim: impl Into<String>, expected: SuperDim, computed: SuperDim) -> Self {
        Self {
            claim: claim.into(),
            expected_sdim: expected,
            computed_sdim: computed,
            matches: expected == computed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentativeView {
    pub parity: supercohom::Parity,
    pub cocycle: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyView {
    pub degree: u8,
    pub restricted: bool,
    pub sdim: SuperDim,
    pub representatives: Vec<RepresentativeView>,
}

impl From<&CohomologyReport> for CohomologyView {
    fn from(r: &CohomologyReport) -> Self {
        Self {
            degree: r.degree,
            restricted: r.restricted,
            sdim: r.sdim,
            representatives: r
                .representatives
                .iter()
                .map(|c| RepresentativeView {
                    parity: c.parity,
                    cocycle: c.expression.clone(),
                })
                .collect(),
        }
    }
}
