use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn herbrand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_herbrand"))
        .args(args)
        .env_remove("HERBRAND_ORACLE_BOUND")
        .output()
        .expect("spawn herbrand")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn module_compute_prints_groups_and_fraction() {
    let dir = TempDir::new().unwrap();
    // ℤ with σ = −1: Ĥ⁰ = 0, H¹ = ℤ/2, h = 1/2
    let f = write(
        &dir,
        "m.json",
        r#"{"n": 2, "generators": 1, "sigma": [[-1]]}"#,
    );
    let o = herbrand(&["module", "compute", &f]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("H^0"));
    assert!(text.contains("H^1"));
    assert!(
        text.lines()
            .any(|l| l.starts_with("herbrand") && l.ends_with("1/2")),
        "{text}"
    );

    let j = json(&herbrand(&["--format", "json", "module", "compute", &f]));
    assert_eq!(j["h0"]["free_rank"], 0);
    assert_eq!(j["h0"]["torsion"], serde_json::json!([]));
    assert_eq!(j["h1"]["torsion"], serde_json::json!([2]));
    assert_eq!(j["herbrand"], "1/2");
}

#[test]
fn module_compute_accepts_string_integers() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "m.json",
        r#"{"n": 2, "generators": 2, "relations": [["123456789012345678901234567890", "0"]],
            "sigma": [["1", "0"], ["0", "-1"]]}"#,
    );
    let o = herbrand(&["--format", "json", "module", "compute", &f]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j = json(&o);
    // ℤ/N with N even contributes a second ℤ/2
    assert_eq!(j["h1"]["torsion"], serde_json::json!([2, 2]));
    assert_eq!(j["h0"]["torsion"], serde_json::json!([2]));
}

#[test]
fn parse_and_validation_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let short = write(
        &dir,
        "short.json",
        "{\"n\": 2, \"generators\": 2,\n \"sigma\": [[1, 0], [0]]}",
    );
    let o = herbrand(&["module", "compute", &short]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).starts_with("error[PARSE_ERROR]"),
        "{}",
        stderr(&o)
    );

    let o = herbrand(&["--format", "json", "module", "compute", &short]);
    assert_eq!(o.status.code(), Some(2));
    let j = json(&o);
    assert_eq!(j["error"]["code"], "PARSE_ERROR");
    assert_eq!(j["error"]["line"], 2);

    let bad = write(
        &dir,
        "bad.json",
        r#"{"n": 2, "generators": 1, "sigma": [[2]]}"#,
    );
    let j = json(&herbrand(&["--format", "json", "module", "compute", &bad]));
    assert_eq!(j["error"]["code"], "VALIDATION_ERROR");
    assert_eq!(j["error"]["cause"], "ORDER_VIOLATION");

    let missing = dir.path().join("absent.json");
    let o = herbrand(&["module", "compute", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[IO_ERROR]"));
}

#[test]
fn module_brute_and_profile() {
    let dir = TempDir::new().unwrap();
    // (ℤ/4)² with the swap
    let f = write(
        &dir,
        "m.json",
        r#"{"n": 2, "generators": 2, "relations": [[4, 0], [0, 4]], "sigma": [[0, 1], [1, 0]]}"#,
    );
    let j = json(&herbrand(&["--format", "json", "module", "brute", &f]));
    assert_eq!(j["agree"], true);
    assert_eq!(j["brute"]["h0_order"], 1);
    assert_eq!(j["brute"]["h1_order"], 1);

    let o = Command::new(env!("CARGO_BIN_EXE_herbrand"))
        .args(["module", "brute", &f])
        .env("HERBRAND_ORACLE_BOUND", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("BOUND_EXCEEDED"), "{}", stderr(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_herbrand"))
        .args(["module", "brute", &f])
        .env("HERBRAND_ORACLE_BOUND", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[USAGE_ERROR]"));

    let j = json(&herbrand(&["--format", "json", "module", "profile", &f]));
    assert_eq!(j["norm_index"]["chain_holds"], true);
    assert_eq!(j["order_two"]["predicted_h"], "1");
}

#[test]
fn perm_commands() {
    let dir = TempDir::new().unwrap();
    // n = 6 acting on 6 points as a 2-cycle, a 3-cycle and a fixed point
    let f = write(
        &dir,
        "x.json",
        r#"{"n": 6, "points": 6, "image": [1, 0, 3, 4, 2, 5]}"#,
    );
    let j = json(&herbrand(&["--format", "json", "perm", "orbits", &f]));
    assert_eq!(j["burnside_count"], 3);
    assert_eq!(j["stabilizer_orders"], serde_json::json!([3, 2, 6]));

    let o = herbrand(&["--format", "json", "perm", "verify", &f]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["holds"], true);
    assert_eq!(j["orbit_product"], 36);

    let bad = write(
        &dir,
        "bad.json",
        r#"{"n": 4, "points": 3, "image": [1, 2, 0]}"#,
    );
    let o = herbrand(&["--format", "json", "perm", "orbits", &bad]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quad_unit_rejects_non_squarefree() {
    let o = herbrand(&["quad", "unit", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NOT_SQUAREFREE"));
    let j = json(&herbrand(&["--format", "json", "quad", "unit", "12"]));
    assert_eq!(j["error"]["code"], "NOT_SQUAREFREE");
}

#[test]
fn quad_commands() {
    let j = json(&herbrand(&["--format", "json", "quad", "unit", "13"]));
    assert_eq!(j["norm"], -1);

    let j = json(&herbrand(&[
        "--format",
        "json",
        "quad",
        "pell",
        "61",
        "--variant",
        "plus-one",
    ]));
    assert_eq!(j["solution"]["x"], 1766319049);
    assert_eq!(j["solution"]["y"], 226153980);

    let o = herbrand(&["--format", "json", "quad", "pell", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["solution"], Value::Null);

    let j = json(&herbrand(&["--format", "json", "quad", "split", "5", "11"]));
    assert_eq!(j["type"], "SPLIT");
    let j = json(&herbrand(&[
        "--format", "json", "quad", "split", "5", "inf",
    ]));
    assert_eq!(j["type"], "SPLIT");

    let o = herbrand(&["quad", "split", "5", "15"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NOT_PRIME"));

    let o = herbrand(&["quad", "sunit", "5", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MISSING_INFINITE_PLACE"));

    let j = json(&herbrand(&["--format", "json", "quad", "trace", "5"]));
    assert_eq!(j["trace_index"], 1);
    let j = json(&herbrand(&["--format", "json", "quad", "trace", "3"]));
    assert_eq!(j["trace_index"], 2);

    let j = json(&herbrand(&["--format", "json", "quad", "h1", "3"]));
    assert_eq!(j["h1_order"], j["h1_by_norm_index"]);
    assert_eq!(j["h1_order"], j["h1_by_module"]);
}

#[test]
fn usage_errors_exit_two_and_help_exits_zero() {
    assert_eq!(herbrand(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(herbrand(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(herbrand(&["quad", "unit", "abc"]).status.code(), Some(2));
    let o = herbrand(&["verify", "units", "--min-d", "50", "--max-d", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[USAGE_ERROR]"));
    let o = herbrand(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn verify_units_sweep_passes() {
    let o = herbrand(&["verify", "units", "--max-d", "2000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("UNITS"));
    let trials = text
        .lines()
        .find_map(|l| l.strip_prefix("trials"))
        .map(|v| v.trim().parse::<usize>().unwrap())
        .unwrap();
    assert!(trials > 1000);
}

#[test]
fn verify_json_is_deterministic() {
    for claim in ["order-two", "orbits", "s-units", "norm-index", "oracle"] {
        let args = [
            "--format", "json", "verify", claim, "--trials", "15", "--seed", "7",
        ];
        let a = herbrand(&args);
        let b = herbrand(&args);
        assert_eq!(a.status.code(), Some(0), "{claim}: {}", stdout(&a));
        assert_eq!(a.stdout, b.stdout, "{claim}");
        let j = json(&a);
        assert_eq!(j["trials"], 15);
        assert_eq!(j["seed"], 7);
        assert_eq!(j["passed"], true);
        assert!(j.get("elapsed_ms").is_none());
    }
    let j = json(&herbrand(&[
        "--format", "json", "verify", "oracle", "--trials", "2", "--timing",
    ]));
    assert!(j["elapsed_ms"].is_u64());
}

#[test]
fn module_files_round_trip_through_the_parser() {
    use herbrand::random_cyclic_module;
    use herbrand_cli::{parse_module_file, ModuleFile};
    for seed in 0..20 {
        let m = random_cyclic_module(seed, 1 + (seed % 6), 3, 12);
        let text = serde_json::to_string(&ModuleFile::from_module(&m)).unwrap();
        let back = parse_module_file(&text).unwrap();
        let dir = TempDir::new().unwrap();
        let f = write(&dir, "m.json", &text);
        assert!(Path::new(&f).exists());
        let o = herbrand(&["--format", "json", "module", "compute", &f]);
        assert_eq!(o.status.code(), Some(0));
        let direct = herbrand::herbrand_quotient(&back);
        assert_eq!(json(&o)["herbrand"], direct.quotient.to_string());
    }
}

#[test]
fn schemas_are_valid_json() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert!(v["title"].is_string());
        count += 1;
    }
    assert_eq!(count, 4);
}
