use std::process::{Command, Output};

use serde_json::{json, Value};

fn teich0(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teich0")).args(args).env_remove("TEICH0_DEGREE").output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = teich0(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn braid_equality() {
    assert_eq!(json_of(&["braid", "eq", "[[1,1],[2,1],[1,1]]", "[[2,1],[1,1],[2,1]]", "--strands", "3"]), json!(true));
    assert_eq!(json_of(&["braid", "eq", "[[1,1]]", "[[2,1]]", "--strands", "3"]), json!(false));
    let z = json_of(&["braid", "special", "full_twist", "--n", "3"]).to_string();
    assert_eq!(json_of(&["braid", "eq", &z, "[]", "--strands", "3", "--center"]), json!(true));
}

#[test]
fn braid_permutation_and_star() {
    assert_eq!(json_of(&["braid", "perm", "[[1,1],[2,1]]"]), json!([2, 3, 1]));
    assert_eq!(json_of(&["braid", "star", "[[1,1]]", "--strands", "4"]), json!({"strands": 4, "letters": [[3, 1]]}));
}

#[test]
fn lie_dimensions() {
    assert_eq!(json_of(&["lie", "dims", "--algebra", "p", "--n", "3", "--degree", "4"]), json!([0, 0, 0, 0]));
    assert_eq!(json_of(&["lie", "dims", "--algebra", "p", "--n", "4", "--degree", "3"]), json!([2, 1, 2]));
    let out = Command::new(env!("CARGO_BIN_EXE_teich0")).args(["lie", "dims", "--algebra", "t", "--n", "4"]).env("TEICH0_DEGREE", "2").output().unwrap();
    assert_eq!(serde_json::from_slice::<Value>(&out.stdout).unwrap(), json!([6, 4]));
}

#[test]
fn lie_bracket_by_generator_names() {
    let v = json_of(&["lie", "bracket", "--algebra", "t", "--n", "4", "t12", "t34", "--degree", "2"]);
    assert_eq!(v["coords"]["2"], json!(["0", "0", "0", "0"]));
    let w = json_of(&["lie", "bracket", "--algebra", "t", "--n", "3", "t12", "t23", "--degree", "3"]);
    assert_eq!(w["coords"]["2"], json!(["-1"]));
    // elements re-enter as arguments
    let u = json_of(&["lie", "bracket", "--algebra", "t", "--n", "3", &w.to_string(), "t13", "--degree", "3"]);
    assert_eq!(u["algebra"], json!("t"));
    let z = json_of(&["lie", "exp", "--algebra", "f", "A", "B", "--degree", "2"]);
    assert_eq!(z["coords"], json!({"1": ["1", "1"], "2": ["1/2"]}));
}

#[test]
fn associator_solve() {
    let v = json_of(&["assoc", "solve", "--degree", "3"]);
    assert_eq!(v["valid"], json!(true));
    assert_eq!(v["logphi"][1][0], json!("1/24"));
}

#[test]
fn associator_eval() {
    let v = json_of(&["assoc", "eval", "--braid", "[[1,1],[1,1]]", "--tree", "(..)", "--degree", "2"]);
    assert_eq!(v["log"], json!([["1"], []]));
    let p = json_of(&["assoc", "eval", "--braid", "{\"strands\":3,\"letters\":[]}", "--tree", "(..).", "--to-tree", ".(..)", "--target", "p"]);
    assert_eq!(p["algebra"], json!("p_3"));
}

#[test]
fn quotient_objects() {
    assert_eq!(json_of(&["cat", "objects", "--group", "cyc", "--letters", "a,b,c"]).as_array().unwrap().len(), 2);
    assert_eq!(json_of(&["cat", "objects", "--group", "dih", "--letters", "a,b,c,d"]).as_array().unwrap().len(), 3);
    assert_eq!(json_of(&["ucat", "teich", "--letters", "a,b,c,d"])["count"], json!(6));
}

#[test]
fn gt_checks_report_through_exit_status() {
    let unit = |l: i64| json!({"lambda": l, "f": {"rank": 2, "letters": []}}).to_string();
    assert!(teich0(&["gt", "check", &unit(1)]).status.success());
    let bad = teich0(&["gt", "check", &unit(3)]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(serde_json::from_slice::<Value>(&bad.stdout).unwrap()["hexagon"], json!(false));
}

#[test]
fn gt_solve_and_to_grt() {
    let v = json_of(&["gt", "solve", "--lambda", "3", "--degree", "3", "--seed", "5"]);
    assert_eq!(v["seed"], json!(5));
    assert_eq!(v["relations"]["valid"], json!(true));
    let e = v["element"].to_string();
    let g = json_of(&["gt", "to-grt", &e, "--degree", "3"]);
    assert_eq!(g["relations"]["valid"], json!(true));
    assert_eq!(g["grt"]["c"], json!("3"));
}

#[test]
fn verify_exit_status_and_report() {
    let out = teich0(&["verify", "all", "--degree", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("seed=0 N=3 mu=1"));
    assert!(text.lines().filter(|l| l.contains(": ")).all(|l| l.contains("PASS")));
    let v = json_of(&["verify", "lie", "--degree", "2", "--format", "json"]);
    assert_eq!(v["seed"], json!(0));
}

#[test]
fn errors_exit_nonzero() {
    for args in [
        vec!["braid", "eq", "[[1,1]", "[]"],
        vec!["braid", "eq", "[[3,1]]", "[]", "--strands", "3"],
        vec!["verify", "nonexistent"],
        vec!["lie", "dims", "--algebra", "q"],
        vec!["assoc", "solve", "--mu", "0"],
        vec!["ucat", "obj", "{\"kind\":\"PaB\",\"tree\":\"(..)\",\"seq\":[\"a\"]}"],
    ] {
        let out = teich0(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}
