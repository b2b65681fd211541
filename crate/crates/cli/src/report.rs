//! Deterministic report payloads: every map is ordered, weights serialize as
//! integer arrays, and oversized integers fall back to decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use window_calculus::characters::Decomposition;
use window_calculus::lascoux::LascouxTerm;
use window_calculus::qpoly::QPolynomial;
use window_calculus::weights::DominantWeight;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
    pub pass: Verdict,
    pub elapsed_ms: u128,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        })
    }
}

pub fn bigint_value(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(n) => json!(n),
        Err(_) => json!(b.to_string()),
    }
}

pub fn weight_value(w: &DominantWeight) -> Value {
    json!(w.entries())
}

pub fn qpoly_value(p: &QPolynomial) -> Value {
    let mut map = serde_json::Map::new();
    for (e, c) in p.terms() {
        map.insert(e.to_string(), bigint_value(c));
    }
    Value::Object(map)
}

pub fn decomposition_value(d: &Decomposition) -> Value {
    let terms: Vec<Value> = d
        .iter()
        .map(|(w, m)| {
            json!({
                "weight": weight_value(w),
                "multiplicity": bigint_value(&m.evaluate_at_one()),
            })
        })
        .collect();
    json!(terms)
}

pub fn lascoux_terms_value(terms: &[LascouxTerm]) -> Value {
    let list: Vec<Value> = terms
        .iter()
        .map(|t| {
            let contributions: Vec<Value> = t
                .contributions
                .iter()
                .map(|c| {
                    let weights: BTreeMap<String, Value> = c
                        .weights
                        .iter()
                        .map(|(name, w)| (name.clone(), weight_value(w)))
                        .collect();
                    json!({
                        "weights": weights,
                        "internalDegree": c.internal_degree,
                        "multiplicity": bigint_value(&c.multiplicity),
                    })
                })
                .collect();
            json!({
                "homologicalIndex": t.homological_index,
                "contributions": contributions,
            })
        })
        .collect();
    json!(list)
}
