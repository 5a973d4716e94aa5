use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geostruct")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Minimal validator covering the keywords the published schema uses.
fn validate(schema: &Value, root: &Value, v: &Value, path: &str) -> Result<(), String> {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.trim_start_matches("#/$defs/");
        return validate(&root["$defs"][name], root, v, path);
    }
    if let Some(alts) = schema.get("oneOf").and_then(Value::as_array) {
        let ok = alts.iter().filter(|s| validate(s, root, v, path).is_ok()).count();
        return if ok == 1 { Ok(()) } else { Err(format!("{path}: oneOf matched {ok}")) };
    }
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let matches = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !matches {
            return Err(format!("{path}: expected {types:?}, got {v}"));
        }
    }
    if let Some(e) = schema.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return Err(format!("{path}: {v} not in {e:?}"));
        }
    }
    if schema.get("pattern").is_some() {
        let s = v.as_str().unwrap_or("");
        let (num, den) = s.split_once('/').unwrap_or((s, "1"));
        if num.trim_start_matches('-').parse::<u128>().is_err() || den.parse::<u128>().is_err() {
            return Err(format!("{path}: {s} is not a rational"));
        }
    }
    if let Some(obj) = v.as_object() {
        for k in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            let k = k.as_str().unwrap();
            if !obj.contains_key(k) {
                return Err(format!("{path}: missing {k}"));
            }
        }
        if let Some(props) = schema.get("properties").and_then(Value::as_object) {
            for (k, s) in props {
                if let Some(x) = obj.get(k) {
                    validate(s, root, x, &format!("{path}.{k}"))?;
                }
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), v.as_array()) {
        for (i, x) in arr.iter().enumerate() {
            validate(items, root, x, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn schema() -> Value {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn strip_timestamp(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("generated_at");
    v
}

#[test]
fn classify_sphere_row_exits_zero_and_validates() {
    let out = run(&["classify", "--space", "LplusS(4,0)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let s = schema();
    validate(&s, &s, &doc, "$").unwrap();
    let r = &doc["reports"][0];
    assert_eq!(r["space"], "LplusS(4,0)");
    assert_eq!(r["closed_two_forms"], 1);
    assert_eq!(r["comparison"]["verdict"], "MATCH");
}

#[test]
fn json_is_byte_stable_without_timestamp() {
    let a = run(&["classify", "--space", "LCH(2)", "--format", "json"]);
    let b = run(&["classify", "--space", "LCH(2)", "--format", "json"]);
    let strip = |o: &Output| {
        let text = String::from_utf8(o.stdout.clone()).unwrap();
        text.lines().filter(|l| !l.trim_start().starts_with("\"generated_at\"")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(strip_timestamp(json(&a)), strip_timestamp(json(&b)));
}

#[test]
fn exit_code_follows_the_verdict() {
    let out = run(&["classify", "--space", "LCP(2)", "--format", "json"]);
    let doc = json(&out);
    let s = schema();
    validate(&s, &s, &doc, "$").unwrap();
    let c = &doc["reports"][0]["complex"];
    assert_eq!(c["candidates"].as_array().unwrap().len(), 4);
    let mismatch = doc["reports"][0]["comparison"]["verdict"] == "MISMATCH";
    assert_eq!(doc["summary"]["pass"], !mismatch);
    assert_eq!(out.status.code(), Some(if mismatch { 1 } else { 0 }));
}

#[test]
fn unknown_space_exits_two_with_supported_list() {
    let out = run(&["classify", "--space", "LXX(9)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("LXX(9)"));
    assert!(err.contains("LOP2") && err.contains("LplusS(p,q)"));
}

#[test]
fn unsupported_parameters_and_bad_flags_exit_two() {
    assert_eq!(run(&["classify", "--space", "LminusS(3,0)"]).status.code(), Some(2));
    assert_eq!(run(&["classify"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["flowcheck", "--chart", "torus"]).status.code(), Some(2));
}

#[test]
fn table1_subset_passes() {
    let out = run(&["table1", "--rows", "LplusS(4,0),LCH(2);LHH(2)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let s = schema();
    validate(&s, &s, &doc, "$").unwrap();
    assert_eq!(doc["summary"]["rows"].as_array().unwrap().len(), 3);
    assert_eq!(doc["summary"]["pass"], true);
}

#[test]
fn table1_text_lists_every_row() {
    let out = run(&["table1", "--rows", "LplusS(3,0);LminusE(3,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("LplusS(3,0)") && text.contains("MATCH-UP-TO-CONVENTION"));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let doc = json(&out);
    assert_eq!(doc["pass"], true);
    assert!(doc["identities"].as_array().unwrap().len() >= 20);
}

#[test]
fn flowcheck_exit_codes() {
    for chart in ["sphere", "hyperbolic"] {
        let out = run(&["flowcheck", "--chart", chart, "--samples", "100", "--tol", "1e-6", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["pass"], true);
    }
    // a tolerance below the finite-difference noise floor must fail
    let out = run(&["flowcheck", "--chart", "sphere", "--tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
}
