//! Golden-file check of the report schema: the audit command's JSON is
//! compared against a stored document field by field: numeric values with
//! a tolerance, everything else exactly. Guards the schema and the
//! documented as-printed discrepancies against silent drift.

use affine_scherk::cli;
use affine_scherk::quad::QuadratureConfig;
use affine_scherk::surfaces::SurfaceSpec;
use num_complex::Complex64;
use serde_json::Value;

const NUMERIC_RTOL: f64 = 1e-9;
const NUMERIC_ATOL: f64 = 1e-12;

fn compare(path: &str, golden: &Value, fresh: &Value, diffs: &mut Vec<String>) {
    match (golden, fresh) {
        (Value::Number(g), Value::Number(f)) => {
            let (g, f) = (g.as_f64().unwrap(), f.as_f64().unwrap());
            if (g - f).abs() > NUMERIC_ATOL + NUMERIC_RTOL * g.abs().max(f.abs()) {
                diffs.push(format!("{path}: {g} vs {f}"));
            }
        }
        (Value::Object(g), Value::Object(f)) => {
            for key in g.keys().chain(f.keys()) {
                match (g.get(key), f.get(key)) {
                    (Some(gv), Some(fv)) => compare(&format!("{path}.{key}"), gv, fv, diffs),
                    (Some(_), None) => diffs.push(format!("{path}.{key}: missing in fresh")),
                    (None, Some(_)) => diffs.push(format!("{path}.{key}: new field")),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(g), Value::Array(f)) => {
            if g.len() != f.len() {
                diffs.push(format!("{path}: length {} vs {}", g.len(), f.len()));
                return;
            }
            for (i, (gv, fv)) in g.iter().zip(f).enumerate() {
                compare(&format!("{path}[{i}]"), gv, fv, diffs);
            }
        }
        (g, f) => {
            if g != f {
                diffs.push(format!("{path}: {g} vs {f}"));
            }
        }
    }
}

#[test]
fn wedata_audit_matches_golden_report() {
    let report = cli::cmd_wedata(
        &SurfaceSpec::euclidean(0.0),
        Complex64::new(0.3, 0.0),
        &QuadratureConfig::default(),
        true,
        1e-6,
    );
    let fresh: Value = serde_json::from_str(&report.to_json_string()).unwrap();
    let golden: Value = serde_json::from_str(include_str!("golden/wedata_audit.json")).unwrap();

    let mut diffs = Vec::new();
    compare("$", &golden, &fresh, &mut diffs);
    assert!(
        diffs.is_empty(),
        "report drifted from golden file:\n{}",
        diffs.join("\n")
    );
}
