use std::path::PathBuf;
use std::process::{Command, Output};

use catalog::Envelope;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalog")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Envelope, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    (serde_json::from_str(&stdout(&o)).unwrap(), o.status.code().unwrap())
}

#[test]
fn verify_cw11_passes() {
    let o = run(&["verify", "cw11", "--mu", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for check in ["einstein", "maxwell", "plucker identity", "supercovariant flatness"] {
        assert!(text.lines().any(|l| l.contains("[pass]") && l.contains(check)), "{check}\n{text}");
    }
    assert!(text.contains("nu = 1"));
}

#[test]
fn perturbed_cw11_fails_with_an_einstein_witness() {
    let o = run(&["verify", "cw11", "--perturb", "A11=+1"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("[FAIL] einstein Ric = 1/2 T2 - 1/6 g|F|^2: (x-, x-)"), "{text}");
}

#[test]
fn verify_all_in_json_is_sorted_and_round_trips() {
    let (env, code) = json(&["verify", "all"]);
    assert_eq!(code, 0);
    assert!(env.passed);
    let ids: Vec<&str> = env.verifications.iter().map(|r| r.background.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 11);
    let again: Envelope = serde_json::from_str(&serde_json::to_string(&env).unwrap()).unwrap();
    assert_eq!(again, env);
}

#[test]
fn background_files() {
    for (file, code) in [("cw11.toml", 0), ("nw6.toml", 0), ("linear-dilaton.toml", 0), ("ads7xs4.toml", 0)] {
        let o = run(&["verify", &data(file)]);
        assert_eq!(o.status.code(), Some(code), "{file}\n{}", stdout(&o));
    }
    let o = run(&["verify", &data("cw11.toml"), "--mu", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let (env, _) = json(&["verify", &data("linear-dilaton.toml")]);
    assert_eq!(env.verifications[0].invariants["dilatino kernel (IIA, frame-constant)"], "16");
}

#[test]
fn malformed_input_exits_with_a_message() {
    let o = run(&["verify", "no-such-background"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown background"));
    let dir = std::env::temp_dir().join(format!("catalog-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "id = \"x\"\ntheory = \"d11\"\n[geometry]\nkind = \"torus\"\n").unwrap();
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "cw11", "--perturb", "Z9=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_with_tables() {
    let o = run(&["enumerate", "--tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for heading in [
        "Elementary parallelisable geometries",
        "Ten-dimensional simply-connected parallelisable spacetimes",
        "Parallelisable backgrounds with a linear dilaton",
        "Supersymmetric parallelisable backgrounds",
    ] {
        assert!(text.contains(heading), "{heading}");
    }
    let brief = stdout(&run(&["enumerate"]));
    assert!(brief.contains("17 geometries") && !brief.contains("Supersymmetric"));
}

#[test]
fn susy_of_a_product_and_of_a_builtin() {
    let (env, code) = json(&["susy", "E^{1,9}"]);
    assert_eq!(code, 0);
    let row = &env.tables.unwrap().supersymmetry[0];
    assert_eq!(row.constant.as_ref().unwrap().iia, 32);
    assert_eq!(row.nonconstant.iia, 16);
    let o = run(&["susy", "AdS3 x E^7"]);
    assert_eq!(o.status.code(), Some(2));
    let (env, code) = json(&["susy", "cw10"]);
    assert_eq!(code, 0);
    // one chirality: all 16 spinors of the chiral bundle are parallel
    assert_eq!(env.verifications[0].invariants["kernel dim"], "16");
    assert_eq!(env.verifications[0].invariants["nu"], "1");
}

#[test]
fn canonicalize_cw() {
    let (env, code) = json(&["canonicalize-cw", &data("cw-matrix.txt")]);
    assert_eq!(code, 0);
    let cw = env.cw.unwrap();
    assert!(!cw.degenerate && cw.exact);
    assert_eq!(cw.eigenvalues, ["-4*sqrt(2)/6", "-sqrt(2)/6", "-sqrt(2)/6"].map(|s| s.parse::<exactnum::Scalar>().unwrap().to_string()));
    let (env, _) = json(&["canonicalize-cw", &data("cw-degenerate.txt")]);
    assert!(env.cw.unwrap().degenerate);
}

#[test]
fn reduce_from_the_command_line() {
    let (env, code) = json(&["reduce", "nw6", "--along", "0,0,1,0,0,0"]);
    assert_eq!(code, 0);
    assert!(env.verifications[0].passed());
    let (env, code) = json(&["reduce", "flat11", "--along", "0,0,0,0,0,0,0,0,0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(env.verifications[0].theory, "d11 -> iia");
    let o = run(&["reduce", "nw6", "--along", "1,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_of_scope_is_always_declared() {
    for args in [vec!["verify", "flat6"], vec!["enumerate"], vec!["canonicalize-cw", &data("cw-matrix.txt")]] {
        let text = stdout(&run(&args));
        for s in catalog::OUT_OF_SCOPE {
            assert!(text.contains(s), "{args:?} lacks `{s}`");
        }
    }
}

#[test]
fn report_directory() {
    let dir = std::env::temp_dir().join(format!("catalog-reports-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_catalog")).args(["verify", "nw6"]).env("CATALOG_REPORT_DIR", &dir).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("verify-nw6.json")).unwrap();
    let env: Envelope = serde_json::from_str(&text).unwrap();
    assert_eq!(env.verifications[0].background, "nw6");
    std::fs::remove_dir_all(dir).unwrap();
}
