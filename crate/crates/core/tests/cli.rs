use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pathdom(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pathdom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rook_profile_through_stdin() {
    let g6 = stdout(&pathdom(
        &["gen", "--family", "rook", "--params", "3"],
        None,
    ));
    let out = pathdom(&["profile", "-", "--json"], Some(&g6));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["epa_bar"], 4);
    assert_eq!(v["Epa_bar"], 4);
}

#[test]
fn complete_bipartite_region() {
    let g6 = stdout(&pathdom(
        &["gen", "--family", "complete_bipartite", "--params", "3,3"],
        None,
    ));
    let out = pathdom(&["regions", "-"], Some(&g6));
    assert!(stdout(&out).contains("region: R5"));
}

#[test]
fn edge_list_input_and_pa() {
    let el = stdout(&pathdom(
        &[
            "gen",
            "--family",
            "path",
            "--params",
            "4",
            "--format",
            "edge-list",
        ],
        None,
    ));
    let out = pathdom(&["pa", "-", "-u", "1", "-v", "2", "--json"], Some(&el));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["direct"], 3);
    assert_eq!(v["prediction"]["pa"], 3);
    assert_eq!(v["prediction"]["clause"], "adjacent/k3/always");
}

#[test]
fn gamma_and_classify() {
    let out = pathdom(&["gamma", "-"], Some("C~\n"));
    assert_eq!(stdout(&out), "gamma: 1\nwitness: {0}\n");
    let out = pathdom(&["classify", "-", "--json"], Some("Ch\n"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["strong_equality"], false);
}

#[test]
fn verify_exhaustive_exit_zero() {
    let out = pathdom(
        &[
            "verify",
            "--mode",
            "exhaustive",
            "--n",
            "4",
            "--suite",
            "all",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).trim_end().ends_with("PASS"));
}

#[test]
fn verify_reports_are_reproducible() {
    let args = [
        "verify", "--mode", "random", "--n", "7", "--p", "0.4", "--count", "40", "--seed", "42",
        "--json",
    ];
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        v.to_string()
    };
    assert_eq!(strip(pathdom(&args, None)), strip(pathdom(&args, None)));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(
        pathdom(&["gamma", "/nonexistent/graph.g6"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pathdom(&["gamma", "-"], Some("!!\n")).status.code(),
        Some(2)
    );
    assert_eq!(
        pathdom(&["pa", "-", "-u", "0", "-v", "0"], Some("Ch\n"))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pathdom(&["regions", "-"], Some("B?\n")).status.code(),
        Some(2)
    );
    assert_eq!(pathdom(&["nonsense"], None).status.code(), Some(2));
    assert_eq!(
        pathdom(&["verify", "--mode", "exhaustive", "--n", "9"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pathdom(&["gen", "--family", "cycle", "--params", "2"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn family_mode_verify() {
    let out = pathdom(
        &[
            "verify",
            "--mode",
            "family",
            "--family",
            "crown(3)",
            "--family",
            "crown(4)",
            "--suite",
            "epa-equals-2",
            "--json",
        ],
        None,
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["config"]["corpus"]["specs"][1], "crown(4)");
}
