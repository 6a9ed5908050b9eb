use num_bigint::BigInt;
use serde_json::{json, Value};

use spo_core::{Laurent, SchurSum, SuiteReport};

/// A JSON number when the value fits in `i64`, a decimal string otherwise.
pub fn int(c: &BigInt) -> Value {
    i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::String(c.to_string()))
}

pub fn laurent_json(p: &Laurent) -> Value {
    Value::Array(p.terms_desc().iter().map(|(e, c)| json!({ "exp": e, "coeff": int(c) })).collect())
}

pub fn schur_json(s: &SchurSum) -> Value {
    Value::Array(s.iter().map(|(p, c)| json!({ "partition": p.to_string(), "coeff": int(c) })).collect())
}

pub fn report_json(r: &SuiteReport, timings: bool) -> Value {
    let failures: Vec<Value> =
        r.failures.iter().map(|f| json!({ "case": f.case, "expected": f.expected, "actual": f.actual })).collect();
    let mut out = json!({
        "suite": r.name,
        "status": if r.passed() { "pass" } else { "fail" },
        "cases": r.cases,
        "failures": failures,
    });
    if timings {
        out["seconds"] = json!(r.elapsed.as_secs_f64());
    }
    out
}

pub fn report_text(r: &SuiteReport, timings: bool) -> String {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {}: {} cases, {} failures", r.name, r.cases, r.failures.len());
    if timings {
        line.push_str(&format!(" ({:.2}s)", r.elapsed.as_secs_f64()));
    }
    for f in r.failures.iter().take(10) {
        line.push_str(&format!("\n  {}: expected {}, got {}", f.case, f.expected, f.actual));
    }
    if r.failures.len() > 10 {
        line.push_str(&format!("\n  … {} more", r.failures.len() - 10));
    }
    line
}
