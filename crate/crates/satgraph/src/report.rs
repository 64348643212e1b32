//! JSON shapes for command output.
//!
//! Conventions: infinite values are the string `"inf"`, rationals are the
//! string `"p/q"` (always with a denominator), edges and non-edges used as
//! keys are `"u-v"`, and graphs are `{"n": .., "edges": [[u, v], ..]}`.

use serde::Serialize;
use serde_json::{Map, Value};

use satgraph_core::oracle::{SatResult, SharpnessProbe};
use satgraph_core::threshold::{self, AutomatonState, StepRule, ThresholdSequence};
use satgraph_core::{Graph, Rational, SatLimit, SatLowerBound, SatValue, SaturationVerdict, Weight, WeightReport};

pub fn ratio(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn pair_key((u, v): (usize, usize)) -> String {
    format!("{u}-{v}")
}

fn weight_value(w: Weight) -> Value {
    match w {
        Weight::Finite(w) => Value::from(w),
        Weight::Infinite => Value::from("inf"),
    }
}

fn sat_value(v: SatValue) -> Value {
    match v {
        SatValue::Finite(v) => Value::from(v),
        SatValue::Infinite => Value::from("inf"),
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.order(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

pub fn weight(h: &Graph, report: &WeightReport) -> Value {
    let edge_weights: Map<String, Value> =
        report.edge_weights.iter().map(|&(e, w)| (pair_key(e), Value::from(w))).collect();
    serde_json::json!({
        "n": h.order(),
        "m": h.size(),
        "edge_weights": edge_weights,
        "graph_weight": weight_value(report.graph_weight),
        "min_edge": report.min_edge.map(pair_key),
    })
}

pub fn lower_bound(wt: Weight, bound: &SatLowerBound, ns: &[usize]) -> Value {
    match bound {
        SatLowerBound::Infinite => serde_json::json!({
            "graph_weight": "inf",
            "slope": "inf",
            "constant": Value::Null,
            "values": ns.iter().map(|&n| serde_json::json!({"n": n, "value": "inf", "integer_value": "inf"})).collect::<Vec<_>>(),
        }),
        SatLowerBound::Linear(b) => serde_json::json!({
            "graph_weight": weight_value(wt),
            "slope": ratio(b.slope),
            "constant": ratio(b.constant),
            "values": ns.iter().map(|&n| serde_json::json!({
                "n": n,
                "value": ratio(b.value_at(n)),
                "integer_value": b.integer_value_at(n),
            })).collect::<Vec<_>>(),
        }),
    }
}

fn satlim(l: SatLimit) -> Value {
    Value::from(l.to_string())
}

fn rule_name(rule: StepRule) -> &'static str {
    match rule {
        StepRule::AddIsolated => "add-isolated",
        StepRule::WeightShift => "weight-shift",
        StepRule::CliqueReset => "clique-reset",
    }
}

fn state(s: &AutomatonState) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("k".into(), Value::from(s.k));
    m.insert("wt".into(), weight_value(s.wt));
    m.insert("has_isolated".into(), Value::from(s.has_isolated));
    m.insert("satlim".into(), satlim(s.satlim));
    m
}

pub fn threshold_weight(seq: &ThresholdSequence) -> Value {
    let states = threshold::trace(seq);
    let mut steps = Vec::with_capacity(seq.steps().len());
    for (i, &step) in seq.steps().iter().enumerate() {
        let mut m = state(&states[i + 1]);
        m.insert("step".into(), Value::from(step.symbol().to_string()));
        m.insert("rule".into(), Value::from(rule_name(threshold::rule_for(&states[i], step))));
        steps.push(Value::Object(m));
    }
    let mut out = state(states.last().expect("trace starts with the initial state"));
    out.insert("sequence".into(), Value::from(seq.to_string()));
    out.insert("trace".into(), Value::Array(steps));
    Value::Object(out)
}

pub fn recognition(g: &Graph, found: Option<&(ThresholdSequence, Vec<usize>)>) -> Value {
    serde_json::json!({
        "n": g.order(),
        "threshold": found.is_some(),
        "sequence": found.map(|(s, _)| s.to_string()),
        "order": found.map(|(_, o)| o.clone()),
    })
}

pub fn verdict(v: &SaturationVerdict) -> Value {
    let certificates = v.certificates().map(|cs| {
        cs.iter()
            .map(|c| serde_json::json!({"non_edge": pair_key(c.non_edge), "embedding": c.embedding.map()}))
            .collect::<Vec<_>>()
    });
    serde_json::json!({
        "h_free": v.is_h_free(),
        "saturated": v.is_saturated(),
        "violating_embedding": v.violating_embedding().map(|e| e.map().to_vec()),
        "missing": v.missing().map(pair_key),
        "certificates": certificates,
    })
}

/// The deterministic part of a `sat-exact` result.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SatJson {
    pub h: GraphJson,
    pub n: usize,
    pub value: Value,
    pub witness_edges: Option<Vec<[usize; 2]>>,
}

impl From<&SatResult> for SatJson {
    fn from(r: &SatResult) -> Self {
        SatJson {
            h: GraphJson::from(&r.h),
            n: r.n,
            value: sat_value(r.value),
            witness_edges: r.witness.as_ref().map(|w| GraphJson::from(w).edges),
        }
    }
}

/// `sat-exact` output: the deterministic fields plus wall-clock time.
pub fn sat_exact(r: &SatResult, runtime_ms: u128) -> Value {
    let mut v = serde_json::to_value(SatJson::from(r)).expect("plain data");
    v["runtime_ms"] = Value::from(runtime_ms as u64);
    v
}

pub fn probe(p: &SharpnessProbe) -> Value {
    serde_json::json!({
        "h": GraphJson::from(&p.h),
        "points": p.points.iter().map(|&(n, v)| serde_json::json!({"n": n, "value": sat_value(v)})).collect::<Vec<_>>(),
        "successive_slopes": p.successive_slopes,
        "weight_slope": satlim(p.weight_slope),
    })
}
