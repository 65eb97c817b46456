//! Deterministic rendering of results: pretty one-liners for humans,
//! versioned JSON for batch consumers. All strings come from the kernel's
//! canonical `Display` forms, so identical inputs give byte-identical
//! output.

use serde_json::{json, Value};
use yokonuma::{PadicTraceValue, RelationCheck, TowerElement, TracePoly, YElement};

pub struct TraceOutput {
    p: Option<u64>,
    levels: Vec<(u32, u64, String)>,
}

impl TraceOutput {
    pub fn classical(d: u64, trace: TracePoly) -> Self {
        TraceOutput {
            p: None,
            levels: vec![(1, d, trace.to_string())],
        }
    }

    pub fn tower(p: u64, value: PadicTraceValue) -> Self {
        let levels = value
            .levels()
            .iter()
            .enumerate()
            .map(|(i, q)| (i as u32 + 1, q.modulus(), q.to_string()))
            .collect();
        TraceOutput { p: Some(p), levels }
    }

    fn to_json(&self, word: Option<&str>) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|(r, d, s)| json!({ "r": r, "d": d, "trace": s }))
            .collect();
        let mut obj = json!({ "schema": 1, "levels": levels });
        if let Some(p) = self.p {
            obj["p"] = json!(p);
        }
        if let Some(w) = word {
            obj["word"] = json!(w);
        }
        obj
    }

    fn pretty(&self) -> String {
        if self.p.is_none() && self.levels.len() == 1 {
            format!("{}\n", self.levels[0].2)
        } else {
            self.levels
                .iter()
                .map(|(r, d, s)| format!("r={r} d={d}: {s}\n"))
                .collect()
        }
    }
}

pub fn render_traces(results: &[(String, TraceOutput)], json: bool, batch: bool) -> String {
    if json {
        let value = if batch {
            Value::Array(
                results
                    .iter()
                    .map(|(w, out)| out.to_json(Some(w)))
                    .collect(),
            )
        } else {
            results[0].1.to_json(None)
        };
        format!("{value}\n")
    } else {
        results.iter().map(|(_, out)| out.pretty()).collect()
    }
}

pub struct EvalOutput {
    p: Option<u64>,
    levels: Vec<(u32, u64, String)>,
}

impl EvalOutput {
    pub fn classical(d: u64, element: YElement) -> Self {
        EvalOutput {
            p: None,
            levels: vec![(1, d, element.to_string())],
        }
    }

    pub fn tower(p: u64, tower: TowerElement) -> Self {
        let levels = tower
            .levels()
            .iter()
            .enumerate()
            .map(|(i, x)| (i as u32 + 1, x.params().d, x.to_string()))
            .collect();
        EvalOutput { p: Some(p), levels }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let levels: Vec<Value> = self
                .levels
                .iter()
                .map(|(r, d, s)| json!({ "r": r, "d": d, "element": s }))
                .collect();
            let mut obj = json!({ "schema": 1, "levels": levels });
            if let Some(p) = self.p {
                obj["p"] = json!(p);
            }
            format!("{obj}\n")
        } else if self.p.is_none() && self.levels.len() == 1 {
            format!("{}\n", self.levels[0].2)
        } else {
            self.levels
                .iter()
                .map(|(r, d, s)| format!("r={r} d={d}: {s}\n"))
                .collect()
        }
    }
}

pub fn render_checks(checks: &[RelationCheck], json: bool) -> String {
    if json {
        let items: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.passed }))
            .collect();
        let all = checks.iter().all(|c| c.passed);
        format!(
            "{}\n",
            json!({ "schema": 1, "checks": items, "all_pass": all })
        )
    } else {
        checks
            .iter()
            .map(|c| format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name))
            .collect()
    }
}
