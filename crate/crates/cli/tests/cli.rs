use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tpc(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tpc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tpc");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = tpc(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn json(bytes: &[u8]) -> serde_json::Value {
    serde_json::from_slice(bytes).expect("json output")
}

#[test]
fn star_value_through_the_pipe() {
    let g = ok(&["gen", "--kind", "star", "--leaves", "3"], b"");
    let result = json(&ok(&["tpc"], &g));
    assert_eq!(result["value"], 4);
    assert_eq!(result["flavor"], "total_proper");
}

#[test]
fn cartesian_star_pipeline_checks() {
    let g = ok(&["gen", "--kind", "path", "--n", "4"], b"");
    let p = ok(&["product", "--op", "cartesian", "--with", "star:3"], &g);
    let doc = json(&p);
    assert_eq!(doc["product"]["labels"]["labels"].as_array().unwrap().len(), 16);
    let colored = ok(&["color", "--theorem", "cart-star"], &p);
    assert_eq!(json(&colored)["repaired"], false);
    let report = json(&ok(&["check"], &colored));
    assert_eq!(report["connected"], true);
}

#[test]
fn corrupted_coloring_fails_check() {
    let g = ok(&["gen", "--kind", "path", "--n", "4"], b"");
    let colored = ok(&["color", "--theorem", "traceable"], &g);
    let mut doc = json(&colored);
    for c in doc["coloring"]["vertex_colors"].as_array_mut().unwrap() {
        *c = 1.into();
    }
    let out = tpc(&["check"], doc.to_string().as_bytes());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out.stdout)["connected"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(tpc(&["gen", "--kind", "path", "--n", "0"], b"").status.code(), Some(2));
    assert_eq!(tpc(&["tpc"], b"not json").status.code(), Some(2));
    let k5 = ok(&["gen", "--kind", "complete", "--n", "5"], b"");
    assert_eq!(tpc(&["tpc"], &k5).status.code(), Some(2));
    let c4 = ok(&["gen", "--kind", "cycle", "--n", "4"], b"");
    let out = tpc(&["tpc", "--unpruned", "--max-colorings", "1"], &c4);
    assert_eq!(out.status.code(), Some(3));
    let out = tpc(&["hunt-perm", "--n-max", "4", "--budget", "0"], b"");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn permutation_star_and_dot() {
    let g = ok(&["gen", "--kind", "star", "--leaves", "4"], b"");
    let p = ok(&["product", "--op", "permutation", "--perm", "1,0,2,3,4"], &g);
    let colored = ok(&["color", "--theorem", "perm-star"], &p);
    assert_eq!(json(&colored)["construction"], "permutation-star");
    ok(&["check"], &colored);
    let dot = String::from_utf8(ok(&["export-dot"], &colored)).unwrap();
    assert!(dot.starts_with("graph G {"));
}

#[test]
fn search_and_flavors() {
    let g = ok(&["gen", "--kind", "complete-bipartite", "--m", "2", "--n", "3"], b"");
    let colored = ok(&["color", "--theorem", "search", "--k", "3"], &g);
    ok(&["check"], &colored);
    ok(&["check", "--flavor", "edge"], &colored);
    assert_eq!(json(&ok(&["tpc", "--flavor", "vertex"], &g))["value"], 1);
}
