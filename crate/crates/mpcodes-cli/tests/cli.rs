//! End-to-end checks of the command-line surface: exit codes, output
//! formats, and the construct → verify → decode → simulate round trip.

use std::path::Path;
use std::process::{Command, Output};

fn mpcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn table1_matches_regression_grid() {
    let out = mpcodes(&["table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "bound,d=1,d=2,d=3,d=4,d=5,d=6,d=7,d=8,d=9",
            "luo,-,-,-,-,-,-,7,4,3",
            "huczynska,120960,120960,60480,20160,5040,1008,168,24,3",
            "singleton,19683,6561,2187,729,243,81,27,9,3",
            "clt,12077,4560,1700,623,224,78,26,8,2",
            "egf,1680,1680,1050,510,210,78,27,9,3",
        ]
    );
}

#[test]
fn distance_command_matches_worked_examples() {
    let out = mpcodes(&[
        "distance", "--metric", "ulam-r", "--r", "2", "3,2,4,1", "1,2,3,4",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = mpcodes(&[
        "distance", "--metric", "ulam-r", "--r", "2", "--oracle", "3,2,4,1", "1,2,3,4",
    ]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = mpcodes(&[
        "distance",
        "--metric",
        "hamming-r",
        "--r",
        "2",
        "2,3,1,4",
        "1,3,2,4",
    ]);
    assert_eq!(stdout(&out).trim(), "2");

    let out = mpcodes(&["distance", "--metric", "ulam", "3,2,1,4", "3,1,2,4"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn unknown_flags_and_bad_domains_exit_2() {
    let out = mpcodes(&["table1", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mpcodes(&["distance", "--metric", "kendall", "1,2", "2,1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = mpcodes(&["bounds", "--n", "9", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_sweep_has_one_row_per_distance() {
    let out = mpcodes(&["bounds", "--n", "9", "--r", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[0].starts_with("d,luo,huczynska,singleton,egf,clt"));
    assert!(lines[1].starts_with("1,-,120960,19683,1680,"));
    // exact rationals survive into the CSV in lowest terms
    assert!(lines[2].contains("560/9"), "{}", lines[2]);
}

#[test]
fn construct_verify_decode_simulate_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("grouping_12_6.json");
    let path = file.to_str().unwrap();

    let out = mpcodes(&[
        "construct",
        "grouping",
        "--n",
        "12",
        "--r",
        "6",
        "--t",
        "1",
        "--out",
        path,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("6 words"));
    assert!(Path::new(path).exists());

    let out = mpcodes(&["verify", "--codebook", path, "--oracle", "--t", "1"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let report = stdout(&out);
    assert!(report.contains("minimum distance: 3 (claimed 3) [ok]"));
    assert!(report.contains("almost-disjoint at t=1: pass"));

    let out = mpcodes(&[
        "decode",
        "--codebook",
        path,
        "--received",
        "7,1,2,3,4,5,6,8,9,10,11,12",
        "--decoder",
        "grouping",
        "--t",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "decoded: 1,2,3,4,5,6|7,8,9,10,11,12");

    let out = mpcodes(&[
        "decode",
        "--codebook",
        path,
        "--received",
        "7,1,2,3,4,5,6,8,9,10,11,12",
        "--decoder",
        "intersection",
        "--t",
        "1",
    ]);
    assert_eq!(stdout(&out).trim(), "decoded: 1,2,3,4,5,6|7,8,9,10,11,12");

    // scrambled far beyond t: detected failure, exit 1
    let out = mpcodes(&[
        "decode",
        "--codebook",
        path,
        "--received",
        "1,2,4,5,7,8,3,6,9,10,11,12",
        "--decoder",
        "grouping",
        "--t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("detected failure"));

    let out = mpcodes(&[
        "simulate",
        "--codebook",
        path,
        "--decoder",
        "grouping",
        "--errors",
        "translocation",
        "--t",
        "1",
        "--trials",
        "500",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("trials,correct,detected,miscorrected,rate")
    );
    assert_eq!(lines.next(), Some("500,500,0,0,1"));
}

#[test]
fn construct_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (file, _) in [(&a, 0), (&b, 1)] {
        let out = mpcodes(&[
            "construct",
            "semi-latin",
            "--n",
            "6",
            "--r",
            "2",
            "--out",
            file.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn design_codebook_files_reload_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("design_r3.json");
    let path = file.to_str().unwrap();

    let out = mpcodes(&[
        "construct",
        "design",
        "--r",
        "3",
        "--k",
        "2",
        "--d",
        "1",
        "--out",
        path,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("24 words"));

    let out = mpcodes(&["verify", "--codebook", path]);
    assert!(out.status.success(), "{}", stdout(&out));

    // with a tiny cap the same construction stays implicit but still
    // simulates through membership and sampling
    let implicit = dir.path().join("design_r3_implicit.json");
    let out = mpcodes(&[
        "construct",
        "design",
        "--r",
        "3",
        "--k",
        "2",
        "--d",
        "1",
        "--out",
        implicit.to_str().unwrap(),
        "--cap",
        "10",
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&implicit).unwrap();
    assert!(!text.contains("\"words\""));
    let out = mpcodes(&[
        "simulate",
        "--codebook",
        implicit.to_str().unwrap(),
        "--decoder",
        "intersection",
        "--errors",
        "translocation",
        "--t",
        "0",
        "--trials",
        "50",
        "--seed",
        "0",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("50,50,0,0,1"));
}

#[test]
fn layered_and_interleaved_constructions_verify() {
    let dir = tempfile::tempdir().unwrap();

    let layered = dir.path().join("layered.json");
    let out = mpcodes(&[
        "construct",
        "layered",
        "--n",
        "8",
        "--r",
        "2",
        "--d",
        "2",
        "--k",
        "1",
        "--out",
        layered.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = mpcodes(&[
        "verify",
        "--codebook",
        layered.to_str().unwrap(),
        "--oracle",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));

    let interleaved = dir.path().join("interleaved.json");
    let out = mpcodes(&[
        "construct",
        "interleaved",
        "--n",
        "6",
        "--r",
        "2",
        "--d",
        "2",
        "--out",
        interleaved.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = mpcodes(&[
        "verify",
        "--codebook",
        interleaved.to_str().unwrap(),
        "--oracle",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn greedy_constructions_verify() {
    let dir = tempfile::tempdir().unwrap();

    let gh = dir.path().join("gh.json");
    let out = mpcodes(&[
        "construct",
        "greedy-hamming",
        "--n",
        "6",
        "--r",
        "3",
        "--d",
        "2",
        "--out",
        gh.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = mpcodes(&["verify", "--codebook", gh.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));

    let gu = dir.path().join("gu.json");
    let out = mpcodes(&[
        "construct",
        "greedy-ulam",
        "--m",
        "5",
        "--d",
        "3",
        "--out",
        gu.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = mpcodes(&["verify", "--codebook", gu.to_str().unwrap(), "--oracle"]);
    assert!(out.status.success(), "{}", stdout(&out));
}
