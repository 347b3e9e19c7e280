//! JSON and text rendering.

use std::str::FromStr;

use goldman_core::{BracketSum, DoubleCosetRep, IntersectionReport, ProjectiveMatrix};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::Input;

pub fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn matrix(m: &ProjectiveMatrix) -> Value {
    Value::Array(m.entries().into_iter().map(big).collect())
}

pub fn input(i: &Input) -> Value {
    json!({ "word": i.text, "matrix": matrix(&i.matrix) })
}

pub fn document(command: &str, subgroup: &str, inputs: Vec<Value>, result: Value) -> Value {
    json!({
        "command": command,
        "subgroup": subgroup,
        "inputs": inputs,
        "result": result,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

/// Grouped terms, ordered by class string.
fn sorted_terms(sum: &BracketSum) -> Vec<(String, i64, &ProjectiveMatrix)> {
    let mut terms: Vec<_> = sum.iter().map(|(c, n, rep)| (c.to_string(), n, rep)).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    terms
}

pub fn bracket_json(sum: &BracketSum, cosets: &[DoubleCosetRep]) -> Value {
    let terms: Vec<Value> = sorted_terms(sum)
        .into_iter()
        .map(|(class, coeff, rep)| json!({ "coeff": coeff, "class": class, "rep": matrix(rep), "trace": big(&rep.abs_trace()) }))
        .collect();
    json!({
        "terms": terms,
        "manhattan": goldman_core::manhattan_norm(sum),
        "pre_grouping_count": sum.pre_grouping.len(),
        "double_cosets": cosets.iter().map(|c| matrix(&c.rep)).collect::<Vec<_>>(),
    })
}

pub fn sum_text(sum: &BracketSum) -> String {
    let terms = sorted_terms(sum);
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (class, coeff, _)) in terms.iter().enumerate() {
        let abs = coeff.unsigned_abs();
        let sign = match (i, *coeff < 0) {
            (0, true) => "-".to_string(),
            (0, false) => String::new(),
            (_, true) => " - ".to_string(),
            (_, false) => " + ".to_string(),
        };
        let factor = if abs == 1 { String::new() } else { abs.to_string() };
        out.push_str(&format!("{sign}{factor}⟨{class}⟩"));
    }
    out
}

pub fn report_json(r: &IntersectionReport) -> Value {
    json!({
        "value": r.value,
        "p_used": r.p_used,
        "q_used": r.q_used,
        "norm": r.norm,
        "oracle": r.oracle,
        "agreed": r.agreed,
        "stabilized": r.stabilized,
    })
}

pub fn report_text(label: &str, r: &IntersectionReport) -> String {
    let divisor = if label == "self-intersection" { 2 * r.p_used * r.q_used } else { r.p_used * r.q_used };
    format!(
        "{label}: {}\n  norm {} / {divisor} at p={}, q={}\n  oracle {} ({})\n  {}\n",
        r.value,
        r.norm,
        r.p_used,
        r.q_used,
        r.oracle,
        if r.agreed { "agrees" } else { "disagrees" },
        if r.stabilized { "stabilized" } else { "not stabilized" },
    )
}
