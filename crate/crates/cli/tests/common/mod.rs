#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the built `polya` binary.
pub fn polya(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_polya"))
        .args(args)
        .output()
        .expect("failed to launch polya");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn is_decimal(v: &Value, allow_sign: bool) -> bool {
    v.as_str().is_some_and(|s| {
        let digits = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    })
}

fn exact_keys(v: &Value, keys: &[&str]) -> Result<(), String> {
    let obj = v
        .as_object()
        .ok_or_else(|| format!("expected object, got {v}"))?;
    let mut found: Vec<&str> = obj.keys().map(String::as_str).collect();
    found.sort_unstable();
    let mut want = keys.to_vec();
    want.sort_unstable();
    if found == want {
        Ok(())
    } else {
        Err(format!("keys {found:?}, expected {want:?}"))
    }
}

/// Structural check of a JSON report against the documented schema.
pub fn validate_report(text: &str) -> Result<Value, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    exact_keys(&v, &["command", "group", "result"])?;
    let command = v["command"].as_str().ok_or("command must be a string")?;
    exact_keys(&v["group"], &["spec", "order", "degree"])?;
    if !v["group"]["spec"].is_string()
        || !v["group"]["order"].is_u64()
        || !v["group"]["degree"].is_u64()
    {
        return Err("group fields have wrong types".into());
    }
    let result = &v["result"];
    match command {
        "count" | "coeff" => {
            exact_keys(result, &["count"])?;
            let n = &result["count"];
            if !(n.is_u64() || n.to_string().bytes().all(|b| b.is_ascii_digit())) {
                return Err(format!("count {n} is not a nonnegative integer"));
            }
        }
        "cycle-index" | "inventory" => {
            exact_keys(result, &["polynomial"])?;
            for term in result["polynomial"]
                .as_array()
                .ok_or("polynomial must be a list")?
            {
                exact_keys(term, &["coefficient", "exponents"])?;
                exact_keys(&term["coefficient"], &["num", "den"])?;
                if !is_decimal(&term["coefficient"]["num"], true)
                    || !is_decimal(&term["coefficient"]["den"], false)
                {
                    return Err(format!("bad coefficient {}", term["coefficient"]));
                }
                let exps = term["exponents"]
                    .as_object()
                    .ok_or("exponents must be an object")?;
                if !exps.values().all(|e| e.as_u64().is_some_and(|e| e > 0)) {
                    return Err(format!("bad exponents {}", term["exponents"]));
                }
            }
        }
        "orbits" => {
            exact_keys(result, &["orbits"])?;
            for orbit in result["orbits"].as_array().ok_or("orbits must be a list")? {
                exact_keys(orbit, &["representative", "size", "composition"])?;
                if !orbit["representative"].is_string() || !orbit["size"].is_u64() {
                    return Err(format!("bad orbit {orbit}"));
                }
                let comp = orbit["composition"]
                    .as_object()
                    .ok_or("composition must be an object")?;
                if !comp.values().all(Value::is_u64) {
                    return Err(format!("bad composition {}", orbit["composition"]));
                }
            }
        }
        "group" => {
            exact_keys(result, &["elements"])?;
            let elems = result["elements"]
                .as_array()
                .ok_or("elements must be a list")?;
            if !elems.iter().all(Value::is_string) {
                return Err("elements must be strings".into());
            }
        }
        other => return Err(format!("unknown command {other:?}")),
    }
    Ok(v)
}
