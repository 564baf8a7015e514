use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_indel-codes"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn gen_helberg_lists_codewords() {
    let out = run(&["gen", "helberg", "--n", "5", "--q", "4", "--s", "2", "--a", "0"]);
    assert!(out.status.success());
    assert_eq!(lines(&out), ["00000", "10033", "23323"]);

    let out = run(&["gen", "helberg", "--n", "5", "--q", "4", "--s", "3", "--a", "0"]);
    assert_eq!(lines(&out), ["00000", "10333"]);
}

#[test]
fn gen_helberg_json_carries_weights() {
    let out = run(&["--format", "json", "gen", "helberg", "--n", "4", "--a", "13"]);
    let doc = json(&out);
    assert_eq!(doc["params"]["m"], 121);
    assert_eq!(doc["params"]["weights"], serde_json::json!([1, 4, 13, 40]));
    assert_eq!(
        doc["codewords"],
        serde_json::json!(["0010", "1013", "1300", "2303", "3332"])
    );
}

#[test]
fn gen_vt_codes() {
    let out = run(&["gen", "vt-qary", "--n", "4", "--q", "4", "--a", "1", "--b", "2"]);
    let words = lines(&out);
    assert_eq!(words.len(), 14);
    assert_eq!(words.first().map(String::as_str), Some("0321"));
    assert_eq!(words.last().map(String::as_str), Some("3223"));

    assert_eq!(
        lines(&run(&["gen", "vt-binary", "--n", "3", "--a", "0"])),
        ["000", "101"]
    );
    let csv = run(&["--format", "csv", "gen", "vt-binary", "--n", "3"]);
    assert_eq!(lines(&csv), ["codeword", "000", "101"]);
}

#[test]
fn map_examples() {
    assert_eq!(lines(&run(&["map", "phi9", "forward", "0010"])), ["11110111"]);
    assert_eq!(lines(&run(&["map", "phi9", "inverse", "0000100100"])), ["33213"]);
    assert_eq!(
        lines(&run(&["map", "phi8", "forward", "0321", "1001"])),
        ["00101101", "01000001"]
    );
    let empty = run(&["map", "phi8", "forward", ""]);
    assert!(empty.status.success());
    assert_eq!(String::from_utf8(empty.stdout).unwrap(), "\n");
}

#[test]
fn sphere_examples() {
    assert_eq!(
        lines(&run(&["sphere", "000101", "--s", "2"])),
        ["0000", "0001", "0010", "0011", "0101"]
    );
    assert_eq!(lines(&run(&["sphere", "23210", "--s", "1"])).len(), 5);
    assert_eq!(lines(&run(&["sphere", "11", "--s", "1"])), ["1"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "thm1", "--n", "4", "--s", "1"]).status.code(), Some(0));

    let violated = run(&["verify", "thm1", "--map", "phi8"]);
    assert_eq!(violated.status.code(), Some(1));
    let last = lines(&violated).pop().unwrap();
    let witness: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(witness["counterexample"]["report"]["verdict"], false);

    assert_eq!(run(&["tables", "table99"]).status.code(), Some(2));
    assert_eq!(run(&["map", "phi9", "inverse", "101"]).status.code(), Some(2));
    assert_eq!(run(&["map", "phi10", "forward", "0"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "helberg"]).status.code(), Some(2));
    assert_eq!(
        run(&["--max-enum", "0", "gen", "vt-binary", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["--max-enum", "10", "gen", "helberg", "--n", "5"]).status.code(),
        Some(3)
    );
}

#[test]
fn verify_campaign_summaries() {
    let thm1 = json(&run(&["--format", "json", "verify", "thm1"]));
    assert_eq!(thm1[0]["max_codewords"], 5);
    assert_eq!(thm1[0]["max_residues"], serde_json::json!([13, 40]));

    let conj2 = run(&["--format", "csv", "verify", "conj2", "--n", "4"]);
    assert!(conj2.status.success());
    assert!(lines(&conj2).iter().any(|l| l.starts_with("4,40,12,5,")));

    assert!(run(&["verify", "conj1", "--n", "4"]).status.success());
    assert!(run(&["verify", "thm2"]).status.success());
}

#[test]
fn output_is_independent_of_worker_count() {
    for args in [
        &["--format", "json", "verify", "conj1", "--n", "4"][..],
        &["--format", "csv", "tables", "table5"][..],
        &["verify", "thm1", "--n-min", "3", "--n-max", "5"][..],
    ] {
        let one = run(&[&["--workers", "1"], args].concat());
        let two = run(&[&["--workers", "2"], args].concat());
        assert_eq!(one.stdout, two.stdout, "{args:?}");
        assert_eq!(one.status.code(), two.status.code());
    }
}

#[test]
fn gen_map_round_trip() {
    let code = run(&["gen", "vt-qary", "--n", "4", "--a", "1", "--b", "2"]);
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("vt12.txt");
    std::fs::write(&path, &code.stdout).unwrap();

    let forward = run(&["map", "phi8", "forward", "--input", path.to_str().unwrap()]);
    assert!(forward.status.success());
    let back = run_with_stdin(&["map", "phi8", "inverse"], &String::from_utf8(forward.stdout).unwrap());
    assert!(back.status.success());
    assert_eq!(back.stdout, code.stdout);
}

#[test]
fn census_tables() {
    let table5 = lines(&run(&["--format", "csv", "tables", "table5"]));
    assert_eq!(table5[..3], ["count,residues", "5,13 40", "4,0 12 14 26 27 39 41 53"]);

    let table15 = lines(&run(&["tables", "table15"]));
    assert_eq!(table15[1], "(2,0)\t20");
    assert_eq!(table15[2], "(0,2) (2,2)\t18");

    let bounds = json(&run(&[
        "--format", "json", "tables", "bounds", "--n-min", "2", "--n-max", "6",
    ]));
    assert!(bounds.is_array());
    assert_eq!(bounds.as_array().unwrap().len(), 5);
}
