//! End-to-end tests of the binary: exit codes, JSON shape, file outputs.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_affine-scherk"))
}

fn run_json(args: &[&str]) -> (serde_json::Value, bool) {
    let output = bin().args(args).output().expect("binary runs");
    let stdout = String::from_utf8(output.stdout).unwrap();
    let parsed = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}):\n{stdout}"));
    (parsed, output.status.success())
}

#[test]
fn height_trivial_point_exits_zero() {
    let (json, ok) = run_json(&[
        "height",
        "--signature",
        "euclidean",
        "--a",
        "0",
        "--x",
        "0",
        "--y",
        "0",
    ]);
    assert!(ok);
    assert_eq!(json["results"]["height"], serde_json::json!(0.0));
    assert_eq!(json["schema"], serde_json::json!(1));
}

#[test]
fn height_rejects_unknown_signature() {
    let output = bin()
        .args(["height", "--signature", "galilean"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("signature"), "{stderr}");
}

#[test]
fn height_out_of_domain_exits_two() {
    let output = bin()
        .args([
            "height",
            "--signature",
            "euclidean",
            "--a",
            "0",
            "--x",
            "1.6",
            "--y",
            "0",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn residual_sweep_spec_example() {
    let (json, ok) = run_json(&[
        "residual",
        "--signature",
        "euclidean",
        "--a",
        "1",
        "--grid",
        "41",
        "--range",
        "1.0",
    ]);
    assert!(ok, "{json}");
    let max = json["results"]["max_abs_residual"].as_f64().unwrap();
    assert!(max < 1e-9, "max residual {max}");
}

#[test]
fn wedata_as_printed_reports_strict_failure() {
    let (json, ok) = run_json(&[
        "wedata",
        "--signature",
        "euclidean",
        "--a",
        "0",
        "--xi-re",
        "0.3",
        "--as-printed",
    ]);
    assert!(ok, "{json}");
    let dev = json["results"]["strict_z_deviation"].as_f64().unwrap();
    assert!(dev > 0.5, "strict-z deviation {dev} should exceed 0.5");
    let cross = json["results"]["cross_route_deviation"].as_f64().unwrap();
    assert!(cross < 1e-6);
}

#[test]
fn ramanujan_tolerance_failure_exits_one() {
    let output = bin()
        .args([
            "ramanujan",
            "--signature",
            "euclidean",
            "--a",
            "1",
            "--x",
            "0.2",
            "--y",
            "0.3",
            "--K",
            "100",
            "--tol",
            "1e-9",
        ])
        .output()
        .unwrap();
    assert_eq!(
        output.status.code(),
        Some(1),
        "coarse truncation cannot hit 1e-9"
    );
}

#[test]
fn pmf_writes_csv_and_json_tables() {
    let dir = std::env::temp_dir().join("ascherk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let csv_path = dir.join("pmf.csv");
    let json_path = dir.join("pmf.json");
    let (json, ok) = run_json(&[
        "pmf",
        "--a",
        "1",
        "--x",
        "0.2",
        "--y",
        "0.3",
        "--n",
        "3",
        "--csv",
        csv_path.to_str().unwrap(),
        "--table-json",
        json_path.to_str().unwrap(),
    ]);
    assert!(ok, "{json}");
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("j,f_j,cumulative\n"));
    assert!(csv.lines().count() > 10);

    let tables: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(tables["split"]["mode"], serde_json::json!("split"));
    assert!(tables["split"]["f"].as_array().unwrap().len() > 5);
    assert!(tables["scalar"]["cumulative"].as_f64().unwrap() > 0.99);
}

#[test]
fn mesh_obj_export() {
    let dir = std::env::temp_dir().join("ascherk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let obj_path = dir.join("scherk.obj");
    let (json, ok) = run_json(&[
        "mesh",
        "--signature",
        "euclidean",
        "--a",
        "0",
        "--kind",
        "grid",
        "--grid",
        "9",
        "--range",
        "1.0",
        "--format",
        "obj",
        "--out",
        obj_path.to_str().unwrap(),
    ]);
    assert!(ok, "{json}");
    let obj = std::fs::read_to_string(&obj_path).unwrap();
    assert!(obj.starts_with("v "));
    assert_eq!(json["results"]["vertices"], serde_json::json!(81));
}

#[test]
fn config_file_overrides_defaults_and_flags_override_config() {
    let dir = std::env::temp_dir().join("ascherk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("defaults.json");
    std::fs::write(
        &cfg_path,
        r#"{ "ramanujan_terms": 1000, "ramanujan_tol": 0.01 }"#,
    )
    .unwrap();

    // config value used when the flag is absent
    let (json, ok) = run_json(&[
        "ramanujan",
        "--a",
        "1",
        "--x",
        "0.2",
        "--y",
        "0.3",
        "--config",
        cfg_path.to_str().unwrap(),
    ]);
    assert!(ok, "{json}");
    assert_eq!(json["inputs"]["K"], serde_json::json!(1000));

    // explicit flag wins over the config file
    let (json, ok) = run_json(&[
        "ramanujan",
        "--a",
        "1",
        "--x",
        "0.2",
        "--y",
        "0.3",
        "--K",
        "2000",
        "--config",
        cfg_path.to_str().unwrap(),
    ]);
    assert!(ok, "{json}");
    assert_eq!(json["inputs"]["K"], serde_json::json!(2000));

    // unknown keys are rejected, not ignored
    let bad_path = dir.join("bad.json");
    std::fs::write(&bad_path, r#"{ "ramanjan_terms": 1000 }"#).unwrap();
    let output = bin()
        .args(["ramanujan", "--config", bad_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn dirichlet_command_end_to_end() {
    let (json, ok) = run_json(&[
        "dirichlet",
        "--a",
        "1",
        "--x",
        "0.2",
        "--y",
        "0.3",
        "--K",
        "10000",
        "--N",
        "100",
    ]);
    assert!(ok, "{json}");
    assert!(json["results"]["error"].as_f64().unwrap() < 5e-4);
}
