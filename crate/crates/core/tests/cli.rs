use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_plane-decomp"))
        .args(args)
        .current_dir(std::env::temp_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generate(name: &str, params: &str) -> String {
    let o = run(&["gen", name, params], "");
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn decompose_then_verify() {
    let g = generate("k4_subdivision", "2,2,2,2,2,2");
    let o = run(&["decompose", "--mode", "2d"], &g);
    assert_eq!(o.status.code(), Some(0));
    let path = std::env::temp_dir().join(format!("plane-decomp-cli-{}.json", std::process::id()));
    std::fs::write(&path, stdout(&o)).unwrap();
    let v = run(&["verify", "--decomposition", path.to_str().unwrap()], "");
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("\"ok\": true"));

    // Moving one edge from the forest to the matching breaks validity.
    let mut doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let d = &mut doc["decomposition"];
    let e = d["forest"].as_array_mut().unwrap().pop().unwrap();
    d["matching"].as_array_mut().unwrap().push(e);
    std::fs::write(&path, doc.to_string()).unwrap();
    let v = run(&["verify", "--decomposition", path.to_str().unwrap()], "");
    assert_eq!(v.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn precondition_failure_prints_witness() {
    let o = run(&["decompose", "--mode", "2d"], &generate("cube", ""));
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "precondition_violated");
    assert_eq!(v["witness"]["kind"], "non_separating_cycle");
}

#[test]
fn three_decompose_to_dot() {
    let o = run(&["decompose", "--mode", "3d", "--out", "dot", "--format", "g6"], "C~\n");
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("style=bold"));
}

#[test]
fn parse_errors_exit_1() {
    let o = run(&["decompose"], "0: (0,1\n");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["gen", "no_such_graph"], "");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["decompose", "--mode", "4d"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_reports_classes() {
    let o = run(&["classify"], &generate("k4sd6", ""));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["in_sep"], true);
}

#[test]
fn single_prescribed_edge_is_in_forest() {
    let o = run(&["decompose", "--mode", "2d", "--prescribed", "3"], &generate("k4sd6", ""));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["decomposition"]["forest"].as_array().unwrap().contains(&serde_json::json!(3)));
}
