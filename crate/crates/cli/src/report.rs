//! Text and JSON Lines rendering of check results.
//!
//! Structured output holds no timings unless asked for, so identical inputs
//! give byte-identical reports. Rationals are always `"p/q"` strings.

use serde_json::{json, Map, Value};
use sympow_core::check::ParamValue;
use sympow_core::invariants::InvariantReport;
use sympow_core::{CheckKind, CheckResult, Error, Monomial, Rational, Verdict};

use crate::parse::{vector_form, IdealDocument};
use crate::suite::{CheckParams, Entry, SuiteOptions, Tally};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn rational_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn int_value(x: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn param_value(v: &ParamValue) -> Value {
    match v {
        ParamValue::Int(i) => int_value(i),
        ParamValue::Rational(r) => json!(rational_string(r)),
        ParamValue::Bool(b) => json!(b),
        ParamValue::Text(s) => json!(s),
    }
}

fn param_text(v: &ParamValue) -> String {
    match v {
        ParamValue::Int(i) => i.to_string(),
        ParamValue::Rational(r) => rational_string(r),
        ParamValue::Bool(b) => b.to_string(),
        ParamValue::Text(s) => s.clone(),
    }
}

pub fn kind_str(k: CheckKind) -> &'static str {
    match k {
        CheckKind::Theorem => "theorem",
        CheckKind::Conjecture => "conjecture",
        CheckKind::Query => "query",
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::NotApplicable => "not-applicable",
    }
}

pub fn monomial_text(m: &Monomial, doc: &IdealDocument) -> String {
    m.fmt_with(&doc.vars)
}

fn exponents_value(m: &Monomial) -> Value {
    Value::Array(
        m.exponents()
            .iter()
            .map(|e| int_value(&num_bigint::BigInt::from(e.clone())))
            .collect(),
    )
}

pub fn ideal_value(doc: &IdealDocument) -> Value {
    let mut map = Map::new();
    map.insert("vars".into(), json!(doc.vars));
    map.insert(
        "gens".into(),
        Value::Array(doc.gens.iter().map(|g| json!(vector_form(g))).collect()),
    );
    if let Some(label) = &doc.label {
        map.insert("label".into(), json!(label));
    }
    Value::Object(map)
}

/// Where a result came from; enough to rerun it.
#[derive(Clone, Debug)]
pub struct Origin {
    pub command: &'static str,
    pub seed: Option<u64>,
    pub instance: Option<u64>,
    pub options: SuiteOptions,
}

pub fn params_value(p: &CheckParams) -> Value {
    let mut map = Map::new();
    if let Some(m) = p.m {
        map.insert("m".into(), json!(m));
    }
    if let Some(t) = p.t {
        map.insert("t".into(), json!(t));
    }
    if let Some(r) = p.r {
        map.insert("r".into(), json!(r));
    }
    if let Some(s) = p.s {
        map.insert("s".into(), json!(s));
    }
    Value::Object(map)
}

pub fn repro_value(doc: &IdealDocument, name: &str, params: &CheckParams, origin: &Origin) -> Value {
    let mut map = Map::new();
    map.insert("ideal".into(), ideal_value(doc));
    map.insert("check".into(), json!(name));
    map.insert("params".into(), params_value(params));
    map.insert("command".into(), json!(origin.command));
    if let Some(seed) = origin.seed {
        map.insert("seed".into(), json!(seed));
    }
    if let Some(i) = origin.instance {
        map.insert("instance".into(), json!(i));
    }
    map.insert(
        "options".into(),
        json!({
            "equality_cap": origin.options.equality_cap,
            "stairs_samples": origin.options.stairs.samples,
            "stairs_seed": origin.options.stairs.seed,
        }),
    );
    map.insert("version".into(), json!(VERSION));
    Value::Object(map)
}

pub fn result_value(res: &CheckResult, doc: &IdealDocument, timing: bool) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("type".into(), json!("check"));
    map.insert("check".into(), json!(res.check));
    map.insert("kind".into(), json!(kind_str(res.kind)));
    map.insert("verdict".into(), json!(verdict_str(res.verdict)));
    map.insert("bug".into(), json!(res.is_bug()));
    map.insert("candidate_counterexample".into(), json!(res.is_candidate_counterexample()));
    let mut params = Map::new();
    for (k, v) in &res.params {
        params.insert((*k).into(), param_value(v));
    }
    map.insert("params".into(), Value::Object(params));
    map.insert("violations".into(), json!(res.violations));
    map.insert(
        "witnesses".into(),
        Value::Array(res.witnesses.iter().map(|w| json!(monomial_text(w, doc))).collect()),
    );
    map.insert(
        "witness_exponents".into(),
        Value::Array(res.witnesses.iter().map(exponents_value).collect()),
    );
    map.insert("notes".into(), json!(res.notes));
    if timing {
        map.insert("elapsed_ms".into(), json!(res.elapsed.as_secs_f64() * 1e3));
    }
    map
}

pub fn error_value(name: &str, error: &Error) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("type".into(), json!("error"));
    map.insert("check".into(), json!(name));
    map.insert("resource_limit".into(), json!(matches!(error, Error::ResourceLimit { .. })));
    map.insert("error".into(), json!(error.to_string()));
    map
}

/// One JSON document per check, with its reproduction block.
pub fn entry_value(entry: &Entry, doc: &IdealDocument, origin: &Origin, timing: bool) -> Value {
    let mut map = match &entry.outcome {
        Ok(res) => result_value(res, doc, timing),
        Err(e) => error_value(entry.name, e),
    };
    map.insert("repro".into(), repro_value(doc, entry.name, &entry.params, origin));
    Value::Object(map)
}

pub fn invariants_value(inv: &InvariantReport) -> Value {
    json!({
        "type": "invariants",
        "alpha_I": int_value(&inv.alpha_i.clone().into()),
        "beta_I": int_value(&inv.beta_i.clone().into()),
        "e": inv.e,
        "sigma": inv.sigma,
        "alpha_Q": rational_string(&inv.alpha_q),
        "waldschmidt": rational_string(&inv.alpha_q),
        "chudnovsky_bound": rational_string(&inv.chudnovsky_bound),
        "chudnovsky_slack": rational_string(&inv.chudnovsky_slack()),
        "equigenerated": inv.equigenerated,
        "squarefree": inv.squarefree,
        "integrally_closed_components": inv.integrally_closed_components,
    })
}

pub fn invariants_text(inv: &InvariantReport) -> String {
    let closed = match inv.integrally_closed_components {
        Some(b) => b.to_string(),
        None => "unknown (over budget)".into(),
    };
    [
        format!("  alpha(I)            {}", inv.alpha_i),
        format!("  beta(I)             {}", inv.beta_i),
        format!("  big-height e        {}", inv.e),
        format!("  sigma(I)            {}", inv.sigma),
        format!("  alpha(Q) = gamma(I) {}", rational_string(&inv.alpha_q)),
        format!("  chudnovsky bound    {}", rational_string(&inv.chudnovsky_bound)),
        format!("  chudnovsky slack    {}", rational_string(&inv.chudnovsky_slack())),
        format!("  equigenerated       {}", inv.equigenerated),
        format!("  square-free         {}", inv.squarefree),
        format!("  Q_P int. closed     {closed}"),
    ]
    .join("\n")
}

fn params_text(p: &CheckParams) -> String {
    let mut parts = Vec::new();
    if let Some(m) = p.m {
        parts.push(format!("m={m}"));
    }
    if let Some(t) = p.t {
        parts.push(format!("t={t}"));
    }
    if let Some(r) = p.r {
        parts.push(format!("r={r}"));
    }
    if let Some(s) = p.s {
        parts.push(format!("s={s}"));
    }
    parts.join(" ")
}

pub fn result_text(res: &CheckResult, doc: &IdealDocument) -> String {
    let status = match (res.verdict, res.kind) {
        (Verdict::Holds, _) => "holds".to_string(),
        (Verdict::NotApplicable, _) => "not applicable".to_string(),
        (Verdict::Fails, CheckKind::Theorem) => "FAILS (bug: proven statement)".to_string(),
        (Verdict::Fails, CheckKind::Conjecture) => "FAILS (candidate counterexample)".to_string(),
        (Verdict::Fails, CheckKind::Query) => "does not hold".to_string(),
    };
    let mut line = status;
    if let Some(w) = res.witness() {
        line.push_str(&format!("; witness {}", monomial_text(w, doc)));
        if res.violations > 1 {
            line.push_str(&format!(" (+{} more)", res.violations - 1));
        }
    }
    let details: Vec<String> = res
        .params
        .iter()
        .filter(|(k, _)| !matches!(*k, "m" | "t" | "r"))
        .map(|(k, v)| format!("{k}={}", param_text(v)))
        .collect();
    if !details.is_empty() {
        line.push_str(&format!("  [{}]", details.join(" ")));
    }
    for n in &res.notes {
        line.push_str(&format!("\n      note: {n}"));
    }
    line
}

pub fn entry_text(entry: &Entry, doc: &IdealDocument) -> String {
    let head = format!("{:<24}{:<14}", entry.name, params_text(&entry.params));
    match &entry.outcome {
        Ok(res) => format!("{head}{}", result_text(res, doc)),
        Err(e) => format!("{head}ERROR: {e}"),
    }
}

pub fn tally_value(t: &Tally) -> Value {
    json!({
        "holds": t.holds,
        "fails_bug": t.bugs,
        "not_applicable": t.not_applicable,
        "candidate_counterexample": t.candidates,
        "answered_false": t.answered_false,
        "resource_limit": t.resource_limits,
        "errors": t.errors,
    })
}

pub fn tally_text(t: &Tally) -> String {
    format!(
        "holds {}, fails (bug) {}, not applicable {}, candidate counterexamples {}, answered false {}, resource limits {}, errors {}",
        t.holds, t.bugs, t.not_applicable, t.candidates, t.answered_false, t.resource_limits, t.errors
    )
}

/// JSON Lines: one compact document per line.
pub fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}
