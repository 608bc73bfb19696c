use std::process::{Command, Output};

fn sw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superweight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = sw(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    serde_json::from_str(&stdout(&v)).unwrap()
}

const SUBCOMMANDS: [&str; 21] = [
    "roots",
    "positive-roots",
    "diagram",
    "legal-moves",
    "ext1",
    "atypicality",
    "odd-reflect",
    "transport",
    "omega",
    "hw",
    "support",
    "iso",
    "classify",
    "hw-borel",
    "dim",
    "schur-mult",
    "sweep",
    "kac",
    "ext1-cat",
    "blocks",
    "selftest",
];

#[test]
fn help_lists_every_subcommand() {
    let help = stdout(&["--help"]);
    for s in SUBCOMMANDS {
        assert!(
            help.lines()
                .any(|l| l.trim_start().starts_with(&format!("{s} "))),
            "{s} missing from help"
        );
        let o = sw(&[s, "--help"]);
        assert!(o.status.success(), "{s} --help");
    }
    // The remaining library operations have their own entries.
    for s in [
        "natural",
        "rho",
        "shift",
        "unshift",
        "central-shift",
        "central-shift-between",
        "pairing",
        "c-of",
        "weight-of",
        "l-count",
        "unique-move",
        "dual",
        "shape",
        "extend",
        "qdim",
    ] {
        assert!(help.contains(s), "{s} missing from help");
    }
}

#[test]
fn diagram_example() {
    let out = stdout(&["diagram", "(0^4|-3)", "--nm", "4,1"]);
    assert_eq!(out, " -1  0  1  2  3  4  5  6\n  o  o  >  >  >  x  o  o\n");
    let j = json(&["diagram", "(0^4|-3)", "--nm", "4,1"]);
    assert_eq!(j["crosses"], serde_json::json!([4]));
    assert_eq!(j["coreL"], serde_json::json!([1, 2, 3]));
    assert_eq!(j["schema"], 1);
}

#[test]
fn example_chain() {
    assert_eq!(
        stdout(&[
            "ext1",
            "(0^4|-3)",
            "(-1^4|1)",
            "--nm",
            "4,1",
            "--align-central"
        ]),
        "true\n"
    );
    assert_eq!(
        stdout(&[
            "ext1",
            "(-1^4|1)",
            "(-1^3,-2|2)",
            "--nm",
            "4,1",
            "--align-central"
        ]),
        "true\n"
    );
    assert_eq!(
        stdout(&[
            "ext1",
            "(0^4|-3)",
            "(-1^3,-2|2)",
            "--nm",
            "4,1",
            "--align-central"
        ]),
        "false\n"
    );
    assert_eq!(
        stdout(&["unique-move", "(0^4|-3)", "--nm", "4,1"]),
        "4 -> 0: (-1,-1,-1,-1|1)\n"
    );
}

#[test]
fn roots_examples() {
    assert_eq!(
        stdout(&["roots", "--family", "q", "--ne", "0"]),
        "0 roots, 0 even, 0 odd\n"
    );
    let j = json(&["roots", "--family", "ospB:k=1", "--nd", "1"]);
    assert_eq!((j["even"].as_u64(), j["odd"].as_u64()), (Some(4), Some(6)));
    let pos = stdout(&["positive-roots", "--family", "sl", "--order", "d2,d1,e1"]);
    assert_eq!(pos.lines().count(), 3);
}

#[test]
fn catalog_commands() {
    assert_eq!(
        stdout(&[
            "hw",
            "--family",
            "SmuV[3,1]",
            "--algebra",
            "sl:2",
            "--n",
            "5"
        ]),
        "(3,1,0,0,0|0,0) borel b< parity even\n"
    );
    let j = json(&[
        "hw",
        "--family",
        "LinfVdual[tail:n-1;b:1]",
        "--algebra",
        "sl:1",
        "--n",
        "4",
    ]);
    assert_eq!(j["weight"]["right"], serde_json::json!(["-3"]));
    assert_eq!(
        stdout(&["iso", "SmuV[]", "Trivial", "--algebra", "sl:1"]),
        "true\n"
    );
    assert_eq!(stdout(&["iso", "Qpart[2,1]", "Qpart[2,1]!Pi"]), "false\n");
    assert_eq!(
        stdout(&["support", "--set", "Smu[2,1]", "--weight", "1,1,0"]),
        "true\n"
    );
    assert_eq!(
        stdout(&["support", "--set", "Smu[2,1]", "--weight", "0,2,0"]),
        "false\n"
    );
    assert_eq!(
        stdout(&[
            "hw-borel",
            "--family",
            "SinfV[tail:n;b:0]",
            "--algebra",
            "sl:1",
            "--order",
            "1|rest"
        ]),
        "false\n"
    );
    let c = json(&["classify", "--algebra", "sl:1"]);
    assert_eq!(c["families"].as_array().unwrap().len(), 10);
}

#[test]
fn character_and_block_commands() {
    assert_eq!(stdout(&["dim", "--sym", "3", "--nm", "2,1"]), "7\n");
    assert_eq!(stdout(&["dim", "--ext", "8", "--nm", "3,1"]), "8\n");
    let s = json(&["sweep", "--mu", "2,2", "--m", "1", "--n", "2..8"]);
    assert_eq!(s["max"], serde_json::json!([1, 2, 2, 2, 2, 2, 2]));
    assert_eq!(
        stdout(&["kac", "--weight", "(0^3|0)", "--n", "3"]),
        "length2 socle (0,0,-1|1) parity odd\n"
    );
    assert_eq!(
        stdout(&["kac", "--weight", "(0,0,0|1/2)", "--n", "3"]),
        "simple\n"
    );
    assert_eq!(
        stdout(&["kac", "--weight", "(0,0,0|7)", "--n", "3"]),
        "simple\n"
    );

    let dir = std::env::temp_dir().join(format!("superweight-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let nodes = dir.join("nodes.txt");
    std::fs::write(&nodes, "# representatives\nTrivial\nLinfV[tail:n-1;b:1]\nLinfVdual[tail:n-1;b:1]  # dual\nSmuV[1]\n").unwrap();
    let j = json(&[
        "blocks",
        "--algebra",
        "sl:1",
        "--nodes-file",
        nodes.to_str().unwrap(),
        "--window",
        "3..8",
    ]);
    assert_eq!(j["components"], serde_json::json!([[0, 1, 2], [3]]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(sw(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        sw(&["diagram", "(0|x)", "--nm", "1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sw(&["diagram", "(0)", "--nm", "1,1", "--nope"])
            .status
            .code(),
        Some(2)
    );
    let o = sw(&["diagram", "(1/2|0)", "--nm", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("NonIntegralWeight: "));
    let o = sw(&[
        "ext1-cat",
        "Trivial",
        "SmuV[1]",
        "--algebra",
        "sl:1",
        "--window",
        "3..4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("WindowTooSmall: "));
    assert_eq!(sw(&["selftest", "--only", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "schur-mult", "--mu", "2,1", "--nm", "3,1"][..],
        &["legal-moves", "(0,0,0|0,0)", "--nm", "3,2"],
        &["--json", "classify", "--algebra", "q"],
        &["--json", "sweep", "--mu", "3,1", "--m", "1", "--n", "2..6"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn json_keys_are_sorted() {
    let raw = stdout(&["--json", "kac", "--weight", "(0^3|0)", "--n", "3"]);
    assert_eq!(
        raw.trim(),
        r#"{"parity":"odd","schema":1,"socle":{"left":["0","0","-1"],"right":["1"]},"structure":"length2"}"#
    );
}

#[test]
fn selftest_group() {
    let out = stdout(&["selftest", "--only", "roots"]);
    assert!(out.starts_with("[PASS] 9."), "{out}");
    assert_eq!(out.lines().count(), 1);
}
