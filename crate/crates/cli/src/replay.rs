//! Re-running checks from the reproduction blocks of a structured report.

use serde_json::Value;
use sympow_core::Limits;

use crate::parse::parse_document;
use crate::report::{verdict_str, VERSION};
use crate::suite::{canonical_check_name, run_check, CheckParams, Prepared, SuiteOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayStatus {
    Reproduced,
    Mismatch { recorded: String, replayed: String },
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct ReplayLine {
    pub line: usize,
    pub check: String,
    pub status: ReplayStatus,
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing `{key}`"))
}

fn small(v: &Value, key: &str) -> Result<Option<u64>, String> {
    match v.get(key) {
        None => Ok(None),
        Some(x) => x.as_u64().map(Some).ok_or_else(|| format!("`{key}` is not an integer")),
    }
}

fn small_u32(v: &Value, key: &str) -> Result<Option<u32>, String> {
    small(v, key)?
        .map(|x| u32::try_from(x).map_err(|_| format!("`{key}` out of range")))
        .transpose()
}

fn recorded_outcome(doc: &Value) -> String {
    match doc.get("type").and_then(Value::as_str) {
        Some("error") => format!("error: {}", doc.get("error").and_then(Value::as_str).unwrap_or("")),
        _ => {
            let verdict = doc.get("verdict").and_then(Value::as_str).unwrap_or("?");
            let witnesses = doc.get("witness_exponents").map(Value::to_string).unwrap_or_default();
            format!("{verdict} {witnesses}")
        }
    }
}

fn replay_document(doc: &Value) -> Result<(String, ReplayStatus), String> {
    let repro = field(doc, "repro")?;
    let check = field(repro, "check")?.as_str().ok_or("`check` is not a string")?.to_string();
    let name = canonical_check_name(&check).ok_or_else(|| format!("unknown check `{check}`"))?;
    let ideal = field(repro, "ideal")?;
    let vars: Vec<&str> = field(ideal, "vars")?
        .as_array()
        .ok_or("`vars` is not a list")?
        .iter()
        .map(|v| v.as_str().ok_or("variable is not a string"))
        .collect::<Result<_, _>>()?;
    let gens: Vec<&str> = field(ideal, "gens")?
        .as_array()
        .ok_or("`gens` is not a list")?
        .iter()
        .map(|v| v.as_str().ok_or("generator is not a string"))
        .collect::<Result<_, _>>()?;
    let text = format!("vars: {}\ngens: {}\n", vars.join(" "), gens.join(", "));
    let parsed = parse_document(&text).map_err(|e| e.to_string())?;

    let p = field(repro, "params")?;
    let params = CheckParams {
        m: small_u32(p, "m")?,
        t: small_u32(p, "t")?,
        r: small_u32(p, "r")?,
        s: small(p, "s")?,
    };
    let mut options = SuiteOptions::default();
    if let Some(o) = repro.get("options") {
        if let Some(cap) = small_u32(o, "equality_cap")? {
            options.equality_cap = cap;
        }
        if let Some(samples) = small(o, "stairs_samples")? {
            options.stairs.samples = samples as usize;
        }
        if let Some(seed) = small(o, "stairs_seed")? {
            options.stairs.seed = seed;
        }
    }

    let prepared = Prepared::new(&parsed.ideal(), Limits::default()).map_err(|e| e.to_string())?;
    let replayed = match run_check(&prepared, name, &params, &options) {
        Ok(res) => {
            let exps: Vec<Value> = res
                .witnesses
                .iter()
                .map(|w| {
                    Value::Array(
                        w.exponents()
                            .iter()
                            .map(|e| {
                                use num_traits::ToPrimitive;
                                e.to_i64().map_or_else(|| Value::from(e.to_string()), Value::from)
                            })
                            .collect(),
                    )
                })
                .collect();
            format!("{} {}", verdict_str(res.verdict), Value::Array(exps))
        }
        Err(e) => format!("error: {e}"),
    };
    let recorded = recorded_outcome(doc);
    let status = if recorded == replayed {
        ReplayStatus::Reproduced
    } else {
        ReplayStatus::Mismatch { recorded, replayed }
    };
    Ok((check, status))
}

/// Replays every document of a JSON Lines report that carries a
/// reproduction block; other documents are skipped.
pub fn replay(text: &str) -> Vec<ReplayLine> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let doc: Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => {
                out.push(ReplayLine {
                    line: i + 1,
                    check: String::new(),
                    status: ReplayStatus::Failed(format!("invalid JSON: {e}")),
                });
                continue;
            }
        };
        if doc.get("repro").is_none() {
            continue;
        }
        let (check, status) = match replay_document(&doc) {
            Ok(x) => x,
            Err(msg) => (String::new(), ReplayStatus::Failed(msg)),
        };
        if let Some(version) = doc.pointer("/repro/version").and_then(Value::as_str) {
            if version != VERSION {
                log_version_skew(version);
            }
        }
        out.push(ReplayLine {
            line: i + 1,
            check,
            status,
        });
    }
    out
}

fn log_version_skew(version: &str) {
    eprintln!("warning: report written by version {version}, replaying with {VERSION}");
}
