use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn curve(name: &str) -> String {
    format!("{}/curves/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn kummer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer")).args(args).output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = kummer(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty());
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Exit code 2 with a JSON error object on stderr and nothing on stdout.
fn error_code(args: &[&str]) -> String {
    let out = kummer(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"]["message"].is_string());
    v["error"]["code"].as_str().unwrap().to_string()
}

fn write_json(dir: &tempfile::TempDir, name: &str, v: &Value) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, serde_json::to_string_pretty(v).unwrap()).unwrap();
    path
}

#[test]
fn dim_on_hermitian_roots() {
    let h3 = curve("h3");
    let v = ok_json(&["dim", "--curve", &h3, "--places", "root:0,root:1,root:2", "--alpha", "-2,2,3"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["classification"], "NonspecialDegG");
    let v = ok_json(&["dim", "--curve", &h3, "--places", "inf,root:0,root:1,root:2", "--alpha", "-1,-2,2,3"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["classification"], "Special");
}

#[test]
fn dim_with_basis() {
    let v = ok_json(&["dim", "--curve", &curve("h3"), "--places", "inf", "--alpha", "8", "--basis"]);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["basis"].as_array().unwrap().len(), 6);
}

#[test]
fn curve_info_on_z() {
    let v = ok_json(&["curve-info", "--curve", &curve("z")]);
    assert_eq!(v["genus"], 24);
    assert_eq!(v["rational_places"], 2026);
}

#[test]
fn curve_places_lists_every_place() {
    let v = ok_json(&["curve-places", "--curve", &curve("h3")]);
    let s = v.to_string();
    assert_eq!(s.matches("\"inf\"").count(), 1);
    assert!(s.contains("root:2"));
}

#[test]
fn gk_necessary_condition_fails() {
    let v = ok_json(&["nonspecial-check", "--curve", &curve("gk2"), "--tuple", "all-ramified", "--necessary-only"]);
    assert_eq!(v, json!({"possible": false, "witness": "floor(degf/m)=0 < r-n-1=1"}));
}

#[test]
fn nonspecial_check_with_alpha() {
    let v = ok_json(&[
        "nonspecial-check",
        "--curve",
        &curve("z"),
        "--tuple",
        "inf,root:1,root:2,root:3,root:4,root:5,root:6,root:7,root:8",
        "--alpha",
        "-7,1,2,3,3,4,5,6,6",
    ]);
    assert_eq!(v["nonspecial_g_minus_1"], true);
    assert_eq!(v["classification"], "NonspecialDegGminus1");
    assert_eq!(v["degree"], 23);
    assert_eq!(v["dim"], 0);
}

#[test]
fn enumerate_on_h2() {
    let h2 = curve("h2");
    let run = |method: &str| ok_json(&["nonspecial-enumerate", "--curve", &h2, "--method", method]);
    assert_eq!(run("separable")["families"].as_array().unwrap().len(), 3);
    assert_eq!(run("lambda1")["families"].as_array().unwrap().len(), 1);
    let scan = run("scan");
    assert_eq!(scan["count"], 6);
    assert_eq!(scan["divisors"].as_array().unwrap().len(), 6);
    let one = ok_json(&["nonspecial-enumerate", "--curve", &h2, "--method", "separable", "--alpha0", "1"]);
    assert_eq!(one["families"][0]["alpha0"], 1);
}

#[test]
fn validation_errors_exit_2() {
    let h3 = curve("h3");
    assert_eq!(error_code(&["dim", "--curve", &h3, "--places", "root:0", "--alpha", "1,2"]), "AlphaLength");
    assert_eq!(error_code(&["lcp-build", "--construction", "1", "--s", "30"]), "SRangeViolation");
    assert_eq!(error_code(&["lcp-build", "--construction", "R", "--s", "0"]), "SRangeViolation");
    assert_eq!(error_code(&["dim", "--curve", "/nonexistent.json", "--places", "inf", "--alpha", "1"]), "IoError");
    assert_eq!(error_code(&["curve-info", "--curve", &h3, "--bogus"]), "UsageError");
    assert_eq!(error_code(&["frobnicate"]), "UsageError");
    assert_eq!(error_code(&["dim", "--curve", &h3, "--places", "nowhere", "--alpha", "1"]), "ParseError");

    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(error_code(&["curve-info", "--curve", garbage.to_str().unwrap()]), "JsonError");
    let non_canonical = write_json(
        &dir,
        "c.json",
        &json!({"field": {"p": 3, "e": 2, "modulus": [1, 0, 1]}, "m": 4, "roots": [{"a": 0, "lambda": 1}]}),
    );
    assert_eq!(error_code(&["curve-info", "--curve", non_canonical.to_str().unwrap()]), "FormatError");
}

#[test]
fn help_exits_zero() {
    let out = kummer(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("lcp-build"));
}

#[test]
fn tsv_output() {
    let out = kummer(&["--format", "tsv", "curve-info", "--curve", &curve("h3")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "genus\t3"));
    assert!(text.lines().any(|l| l == "totally_ramified\tinf,root:0,root:1,root:2"));
    let keys: Vec<&str> = text.lines().map(|l| l.split('\t').next().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn output_is_byte_stable() {
    let args = ["lcp-build", "--construction", "2", "--s", "7"];
    let a = kummer(&args);
    let b = kummer(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let mut pretty = serde_json::to_vec_pretty(&v).unwrap();
    pretty.push(b'\n');
    assert_eq!(a.stdout, pretty);
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (construction, s) in [("1", "3"), ("2", "6"), ("R", "2")] {
        for emit in [false, true] {
            let mut args = vec!["lcp-build", "--construction", construction, "--s", s];
            if emit {
                args.push("--emit-generators");
            }
            let built = kummer(&args);
            assert_eq!(built.status.code(), Some(0), "{}", String::from_utf8_lossy(&built.stderr));
            let path = dir.path().join(format!("r{construction}{emit}.json"));
            fs::write(&path, &built.stdout).unwrap();
            let v = ok_json(&["lcp-verify", "--result", path.to_str().unwrap()]);
            assert_eq!(v["verdict"], "LCP", "{construction} {s}");
            assert_eq!(v["stored_verdict"], "LCP");
            assert_eq!(v["all_pass"], true);
            assert_eq!(v["generators"], if emit { "stored" } else { "rebuilt" });
            // verification leaves the file alone
            assert_eq!(fs::read(&path).unwrap(), built.stdout);
        }
    }
}

#[test]
fn verify_rejects_tampered_results() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ok_json(&["lcp-build", "--construction", "1", "--s", "3"]);
    v["certificates"]["lmd_minus_d"]["chain"][0]["c"] = json!(4);
    let path = write_json(&dir, "bad.json", &v);
    assert_eq!(error_code(&["lcp-verify", "--result", path.to_str().unwrap()]), "CertificateInvalid");
}

#[test]
fn explicit_e_file() {
    let dir = tempfile::tempdir().unwrap();
    let e = json!({"coeffs": [{"place": "root:1", "c": 1}, {"place": "root:2", "c": 2}]});
    let path = write_json(&dir, "e.json", &e);
    let before = fs::read(&path).unwrap();
    for s in 1..=6 {
        let v = ok_json(&["lcp-build", "--construction", "R", "--s", &s.to_string(), "--E", path.to_str().unwrap()]);
        assert_eq!(v["dims"], json!([21 - 3 * s, 3 * s]));
        assert_eq!(v["all_pass"], true);
    }
    assert_eq!(fs::read(&path).unwrap(), before);

    // degree 3 is not g - 1 for the first construction
    assert_eq!(
        error_code(&["lcp-build", "--construction", "1", "--s", "3", "--E", path.to_str().unwrap()]),
        "ENotCertified"
    );
}

#[test]
fn code_info_from_export_and_divisor() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_json(&dir, "g.json", &json!({"coeffs": [{"place": "inf", "c": 9}]}));
    let v = ok_json(&[
        "code-info",
        "--curve",
        &curve("h3"),
        "--G",
        g.to_str().unwrap(),
        "--samples",
        "50",
        "--seed",
        "4",
        "--export",
    ]);
    assert_eq!(v["N"], 24);
    assert_eq!(v["k"], 7);
    assert_eq!(v["goppa_bound"], 15);
    assert_eq!(v["samples"]["goppa_violations"], 0);
    let export = write_json(&dir, "code.json", &v["code"]);
    let w = ok_json(&["code-info", "--code", export.to_str().unwrap()]);
    assert_eq!(w["N"], 24);
    assert_eq!(w["k"], 7);
}
