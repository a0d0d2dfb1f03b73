use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ncfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncfree")).args(args).env_remove("NCFREE_MAX_N").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = ncfree(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    ncfree(args).status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn enumerate_counts() {
    assert!(ok(&["enumerate", "4"]).ends_with("count: 14\n"));
    assert!(ok(&["enumerate", "4", "--class", "p-alt"]).ends_with("count: 3\n"));
    assert_eq!(ok(&["enumerate", "2", "--class", "eps-alt", "--eps", "12"]), "{1,2}\ncount: 1\n");
    let j: serde_json::Value = serde_json::from_str(&ok(&["enumerate", "3", "--json"])).unwrap();
    assert_eq!(j["count"], 5);
}

#[test]
fn enumerate_rejects_bad_input() {
    assert_eq!(code(&["enumerate", "4", "--class", "odd"]), 2);
    assert_eq!(code(&["enumerate", "4", "--class", "eps-alt"]), 2);
    assert_eq!(code(&["enumerate", "4", "--class", "eps-alt", "--eps", "2112"]), 2);
    assert_eq!(code(&["enumerate", "11"]), 2);
}

#[test]
fn ground_set_override() {
    let run =
        |v: &str| Command::new(env!("CARGO_BIN_EXE_ncfree")).args(["enumerate", "11", "--json"]).env("NCFREE_MAX_N", v).output().unwrap();
    let out = run("11");
    assert_eq!(out.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["count"], 58786);
    assert_eq!(run("13").status.code(), Some(2));
}

#[test]
fn kreweras_cases() {
    assert_eq!(ok(&["kreweras", "{1,4,5}{2,3}{6,8}{7}"]), "{1,3}{2}{4}{5,8}{6,7}\n");
    assert_eq!(ok(&["kreweras", "{1}{2}{3}"]), "{1,2,3}\n");
    assert_eq!(ok(&["kreweras", "{1,2}", "--relative", "{1,2}"]), "{1}{2}\n");
    assert_eq!(code(&["kreweras", "{1,3}{2,4}"]), 2);
    assert_eq!(code(&["kreweras", "{1,2}{3}", "--relative", "{1}{2,3}"]), 2);
}

#[test]
fn boxstar_files() {
    let dir = tempfile::tempdir().unwrap();
    let zeta = write(dir.path(), "zeta.json", &ok(&["series", "zeta", "--nvars", "2", "--degree", "5"]));
    let moeb = write(dir.path(), "moeb.json", &ok(&["series", "moeb", "--nvars", "2", "--degree", "5"]));
    let sum_text = ok(&["series", "sum", "--nvars", "2", "--degree", "5"]);
    let sum = write(dir.path(), "sum.json", &sum_text);
    assert_eq!(ok(&["boxstar", &zeta, &moeb]), sum_text);
    assert_eq!(ok(&["boxstar", &zeta, &sum]), fs::read_to_string(&zeta).unwrap());
    let z = write(dir.path(), "z.json", &ok(&["series", "sum", "--degree", "4"]));
    assert_eq!(ok(&["boxstar", &z, &z]), fs::read_to_string(&z).unwrap());
    assert_eq!(code(&["boxstar", &zeta, &z]), 2);
    assert_eq!(code(&["boxstar", &zeta, "/nonexistent.json"]), 2);
}

#[test]
fn transform_files() {
    let dir = tempfile::tempdir().unwrap();
    let semi = write(dir.path(), "r.json", "{\"nvars\": 1, \"degree_cap\": 6, \"terms\": [[[1,1], \"1\", \"0\"]]}");
    let m: serde_json::Value = serde_json::from_str(&ok(&["transform", "m-from-r", &semi])).unwrap();
    let got: Vec<(usize, String)> =
        m["terms"].as_array().unwrap().iter().map(|t| (t[0].as_array().unwrap().len(), t[1].as_str().unwrap().to_string())).collect();
    assert_eq!(got, [(2, "1".to_string()), (4, "2".to_string()), (6, "5".to_string())]);

    let zero = write(dir.path(), "zero.json", "{\"nvars\": 2, \"degree_cap\": 4, \"terms\": []}");
    let r: serde_json::Value = serde_json::from_str(&ok(&["transform", "r-from-m", &zero])).unwrap();
    assert_eq!(r, serde_json::from_str::<serde_json::Value>(&fs::read_to_string(&zero).unwrap()).unwrap());

    let mtext = ok(&["transform", "m-from-r", &semi]);
    let mfile = write(dir.path(), "m.json", &mtext);
    let back = ok(&["transform", "r-from-m", &mfile]);
    let original = ok(&["boxstar", &semi, &write(dir.path(), "unit.json", &ok(&["series", "sum", "--degree", "6"]))]);
    assert_eq!(back, original);
}

#[test]
fn verify_suites() {
    assert!(ok(&["verify", "zetamoeb", "--degree", "8"]).starts_with("zetamoeb: PASS"));
    assert!(ok(&["verify", "thm1.5", "--degree", "8", "--instances", "20", "--seed", "1"]).starts_with("thm1.5: PASS"));
    assert!(ok(&["verify", "lemma4.7", "--degree", "10"]).starts_with("lemma4.7: PASS"));
    assert_eq!(code(&["verify", "thm0.0"]), 2);
    assert_eq!(code(&["verify", "lemma4.7", "--degree", "99"]), 2);
    assert!(ok(&["suites"]).lines().count() >= 20);
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["verify", "prop7.3", "--degree", "4", "--instances", "2", "--seed", "5", "--json"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let j: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(j["params"]["seed"], 5);
    assert_eq!(j["failures"].as_array().unwrap().len(), 0);
}
