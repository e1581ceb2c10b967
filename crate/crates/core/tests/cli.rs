use std::process::{Command, Output};

fn weylnu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylnu")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn nu_of_e7() {
    let o = weylnu(&["nu", "--type", "E7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2431/9216\n");
}

#[test]
fn f4_table_has_the_printed_column() {
    let o = weylnu(&["identity", "--type", "F4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut scaled: Vec<u64> = text
        .lines()
        .filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().last().unwrap().parse().unwrap())
        .collect();
    scaled.sort();
    assert_eq!(scaled, vec![128, 144, 180, 315, 385]);
    assert!(text.contains("total = 1"));
}

#[test]
fn identity_json_fields() {
    let o = weylnu(&["identity", "--type", "G2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v[0];
    assert_eq!(r["type"], "G2");
    assert_eq!(r["total"], "1");
    assert_eq!(r["gamma"], serde_json::json!([0]));
    assert_eq!(r["terms"][2]["decomposition"], "A1xA1");
    assert_eq!(r["terms"][2]["nu"], "1/4");
}

#[test]
fn sweep_and_tsv() {
    let o = weylnu(&["identity", "--type", "B2..B4", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("type\tnode\tdecomposition\tnu\tscaled"));
    assert_eq!(lines.count(), 3 + 4 + 5);
}

#[test]
fn output_is_byte_stable_and_written_to_file() {
    let dir = std::env::temp_dir().join(format!("weylnu-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("volume.json");
    let args = ["volume", "--type", "B3", "--samples", "20000", "--seed", "42", "--format", "json"];
    let a = weylnu(&args);
    let b = weylnu(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["type", "samples", "seed", "workers", "estimate", "stderr", "exact", "z_score"] {
        assert!(v[0].get(key).is_some(), "{key}");
    }
    assert_eq!(v[0]["exact"], "5/16");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(weylnu(&["nu", "--type", "X9"]).status.code(), Some(2));
    assert_eq!(weylnu(&["identity", "--type", "D2"]).status.code(), Some(2));
    assert_eq!(weylnu(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(weylnu(&["series", "--part", "3", "--order", "1"]).status.code(), Some(0));
    assert_eq!(weylnu(&["solomon", "--type", "E6"]).status.code(), Some(3));
    assert_eq!(weylnu(&["steinberg", "--type", "B2", "--cap", "4"]).status.code(), Some(3));
    assert_eq!(weylnu(&["companion", "--type", "G2"]).status.code(), Some(0));
}

#[test]
fn group_checks_report_exact_values() {
    let o = weylnu(&["solomon", "--type", "A2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v[0];
    assert_eq!(r["check"], "solomon");
    assert!(r["lhs"].is_string() && r["rhs"] == r["lhs"]);
    assert_eq!(r["points"].as_array().unwrap().len(), 5);
}

#[test]
fn report_all_lists_every_criterion() {
    let o = weylnu(&["report-all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ids: Vec<u64> = v.as_array().unwrap().iter().map(|e| e["criterion"].as_u64().unwrap()).collect();
    assert_eq!(ids, (1..=9).collect::<Vec<_>>());
    assert!(v.as_array().unwrap().iter().all(|e| e["pass"] == true));
}
