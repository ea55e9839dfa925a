use std::process::{Command, Output};

fn easycat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_easycat"))
        .args(args)
        .env_remove("EASYCAT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_pairings() {
    let o = easycat(&["enumerate", "--lower", "wwwwww", "--class", "P2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("count: 15\n"));

    let o = easycat(&["enumerate", "--lower", "wwwwww", "--class", "NC2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 5);
}

#[test]
fn membership_of_crossing() {
    let d = "www|www;u1-l3,u2-l2,u3-l1";
    let o = easycat(&["member", "--geometry", "O_N*", "--diagram", d]);
    assert_eq!(stdout(&o), "IN\n");
    let o = easycat(&["member", "--geometry", "O_N+", "--diagram", "ww|ww;u1-l2,u2-l1"]);
    assert_eq!(stdout(&o), "NOT-FOUND-WITHIN-BUDGET\n");
}

#[test]
fn exit_codes() {
    assert_eq!(easycat(&["closure", "--geometry", "bogus"]).status.code(), Some(2));
    assert_eq!(easycat(&["render", "ww|;u1-u3"]).status.code(), Some(2));
    assert_eq!(
        easycat(&["closure", "--geometry", "O_N", "--budget", "40"]).status.code(),
        Some(3)
    );
    assert_eq!(
        easycat(&["freeness", "--max-len", "3", "--format", "csv"]).status.code(),
        Some(2)
    );
    assert_eq!(easycat(&["enumerate", "--lower", "w", "--class", "P2"]).status.code(), Some(0));
    assert_eq!(easycat(&["enumerate", "--lower", "wz", "--class", "P2"]).status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_easycat"))
        .args(["closure", "--geometry", "O_N", "--format", "json"])
        .env("EASYCAT_BUDGET", "4")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["budget"]["max_points"], 4);
}

#[test]
fn json_is_deterministic() {
    let args = ["brauer", "--geometry", "U_N", "-N", "2", "--budget", "3", "--format", "json"];
    let a = stdout(&easycat(&args));
    let b = stdout(&easycat(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["verdict"] == "EQUAL"));
}

#[test]
fn brauer_csv_header() {
    let o = easycat(&["brauer", "--geometry", "O_N", "-N", "2", "--budget", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("upper,lower,diagrams,span_rank,sampled_dims,verdict,seed_consistent\n"));
    assert!(s.contains("-,ww,1,1,1;1;1,EQUAL,true"));
}

#[test]
fn group_commands() {
    let o = easycat(&["separate-tori", "-N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NONTRIVIAL"));

    let o = easycat(&["freeness", "--max-len", "5"]);
    assert!(stdout(&o).starts_with("PASS"));

    let o = easycat(&["sphere-model", "-N", "2", "--seed-list", "4,9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn torus_presentations() {
    let o = easycat(&["torus-relations", "--geometry", "U_Ntimes", "-N", "2", "--budget", "6", "--instances"]);
    assert!(stdout(&o).lines().any(|l| l == "g1 g1^-1 g2 = g2 g1^-1 g1"));
    let o = easycat(&["torus-relations", "--geometry", "U_Ntimes", "-N", "3", "--budget", "6", "--instances"]);
    assert!(stdout(&o).lines().any(|l| l == "g1 g2^-1 g3 = g3 g2^-1 g1"));
    let o = easycat(&["torus-relations", "--geometry", "U_Ntimes", "-N", "2", "--budget", "6", "--nontrivial"]);
    assert_eq!(stdout(&o), "generators: g1 g2\n");
}

#[test]
fn render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x3.svg");
    let o = easycat(&[
        "render",
        "wb|bw;u1-u2,l1-l2",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));

    let o = easycat(&["render", "www|www;u1-l3,u2-l2,u3-l1", "--format", "ascii"]);
    assert!(stdout(&o).starts_with("u  w  w  w\n"));
}
