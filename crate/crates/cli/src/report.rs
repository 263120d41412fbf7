use colorhom::checks::{Verdict, Witness};
use colorhom::Vector;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

fn coords(v: &Vector) -> Value {
    Value::Array(v.coords().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn witness_json(w: &Witness) -> Value {
    json!({
        "identity": w.identity,
        "indices": w.indices,
        "left": coords(&w.left),
        "right": coords(&w.right),
    })
}

/// `{"passes": bool, "witness": null | {...}}`
pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "passes": v.passes(),
        "witness": v.witness().map(witness_json),
    })
}

pub fn vector_text(v: &Vector) -> String {
    let parts: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn witness_text(w: &Witness) -> String {
    let idx: Vec<String> = w.indices.iter().map(|i| i.to_string()).collect();
    format!(
        "{} at ({}): left {} != right {}",
        w.identity,
        idx.join(", "),
        vector_text(&w.left),
        vector_text(&w.right)
    )
}

pub fn verdict_text(v: &Verdict) -> String {
    match v.witness() {
        None => "pass".to_string(),
        Some(w) => format!("fail: {}", witness_text(w)),
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
