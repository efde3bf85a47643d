//! End-to-end checks of the command-line surface: report contents, exit
//! codes, file output, and the decode/encode contract on the shipped
//! fixtures.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_fixtures(args: &[&str], files: &[&str]) -> Output {
    let mut full: Vec<String> = args.iter().map(ToString::to_string).collect();
    full.extend(files.iter().map(|f| fixture(f).display().to_string()));
    Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args(&full)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 report")
}

#[test]
fn cohomology_compute_z2_z2() {
    let out = run_fixtures(
        &["cohomology", "compute", "--n", "3"],
        &["z2.group", "z2.group", "trivial_z2_z2.action"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("H^3(G, A) = Z/2\n"), "got: {text}");
    assert!(text.contains("generator 1 (order 2):"));
    assert!(text.contains("cochain 3 2 2"));
}

#[test]
fn cohomology_compute_z2_z3_is_trivial() {
    let out = run_fixtures(
        &["cohomology", "compute", "--n", "3"],
        &["z2.group", "z3.group", "trivial_z2_z3.action"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "H^3(G, A) = 0\n");
}

#[test]
fn grcat_equiv_identical_files() {
    let out = run_fixtures(&["grcat", "equiv"], &["xyz.grcat", "xyz.grcat"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("EQUIVALENT\nphi: 0 1\npsi: 0 1\nf:\n"), "got: {text}");
}

#[test]
fn grcat_equiv_distinct_classes() {
    let out = run_fixtures(&["grcat", "equiv"], &["zero.grcat", "xyz.grcat"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("NOT EQUIVALENT\n"));
}

#[test]
fn xmod_skeletalize_twisted() {
    let out = run_fixtures(&["xmod", "skeletalize"], &["twisted.xmod"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("pi0 = Z/2\n"));
    assert!(text.contains("pi1 = Z/2\n"));
    assert!(text.contains("action: trivial\n"));
    assert!(text.ends_with("sinh class: nonzero\n"));
}

#[test]
fn xmod_skeletalize_normal_subgroup() {
    let out = run_fixtures(&["xmod", "skeletalize"], &["normal_z4.xmod"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("pi1 = 0\n"));
    assert!(text.ends_with("sinh class: zero\n"));
}

#[test]
fn pic_invariants_of_chains() {
    let doubled = run_fixtures(&["pic", "invariants"], &["doubling_z4.chain"]);
    assert_eq!(doubled.status.code(), Some(0));
    assert_eq!(stdout(&doubled), "pi0 = Z/2\npi1 = Z/2\n");
    let split = run_fixtures(&["pic", "invariants"], &["split_z2.chain"]);
    assert_eq!(stdout(&split), "pi0 = Z/2\npi1 = Z/2\n");
}

#[test]
fn nerve_build_group_with_homology() {
    let out =
        run_fixtures(&["nerve", "build", "--dim", "3", "--homology"], &["z3.group"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("simplex 0 0 : ()"));
    assert!(text.ends_with("H_0 = Z\nH_1 = Z/3\nH_2 = 0\n"), "got: {text}");
}

#[test]
fn nerve_build_two_group_input() {
    let out = run_fixtures(
        &["nerve", "build", "--dim", "3", "--homology"],
        &["normal_z4.xmod"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("simplex 1 0 : (1)"));
    assert!(text.contains("H_1 = Z/2\n"));
}

#[test]
fn coherence_sweep_and_expression_pair() {
    let out = run_fixtures(&["coherence", "check", "--n", "4"], &["xyz.grcat"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 26);
    assert!(text.ends_with("coherent: 25 pairs, 16 assignments, 1600 evaluations\n"));

    let mut args = vec![
        "coherence".to_string(),
        "check".to_string(),
        fixture("xyz.grcat").display().to_string(),
        "((a*b)*c)*d".to_string(),
        "a*(b*(c*d))".to_string(),
    ];
    let out = Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args(&mut args)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "PASS ((a*b)*c)*d -> a*(b*(c*d))\n");
}

#[test]
fn coherence_rejects_mismatched_expressions() {
    let out = Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args([
            "coherence".to_string(),
            "check".to_string(),
            fixture("xyz.grcat").display().to_string(),
            "(a*b)*c".to_string(),
            "a*b".to_string(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = run_fixtures(&["pic", "invariants", "--frobnicate"], &["split_z2.chain"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("twogroups-bad-{}.group", std::process::id()));
    std::fs::write(&path, "group 2\n0 1\n1 2\n").unwrap();
    let out = run(&["nerve", "build", "--dim", "2", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn size_bounds_exit_three() {
    let out = run_fixtures(
        &["cohomology", "compute", "--n", "9"],
        &["z2.group", "z2.group", "trivial_z2_z2.action"],
    );
    assert_eq!(out.status.code(), Some(3));

    let out = run_fixtures(&["nerve", "build", "--dim", "9"], &["z2.group"]);
    assert_eq!(out.status.code(), Some(3));

    // a tightened search bound turns the equivalence decision into a
    // bound error
    let out = run_fixtures(
        &["grcat", "equiv", "--max-order", "1"],
        &["xyz.grcat", "xyz.grcat"],
    );
    assert_eq!(out.status.code(), Some(3), "stderr: {:?}", String::from_utf8(out.stderr));
}

#[test]
fn out_flag_writes_report_file() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("twogroups-report-{}.txt", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args([
            "pic".to_string(),
            "invariants".to_string(),
            "--out".to_string(),
            path.display().to_string(),
            fixture("split_z2.chain").display().to_string(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "pi0 = Z/2\npi1 = Z/2\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn fixture_files_decode_and_round_trip() {
    // decode . encode is the identity on every shipped fixture
    for name in ["z2.group", "z3.group", "z4.group", "klein.group", "s3.group"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let g = twogroups::codec::decode_group(&text).unwrap();
        assert_eq!(twogroups::codec::encode_group(&g), text, "{name}");
    }
    for name in ["zero.grcat", "xyz.grcat"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let cat = twogroups::codec::decode_grcat(&text).unwrap();
        assert_eq!(twogroups::codec::encode_grcat(&cat), text, "{name}");
    }
    for name in ["twisted.xmod", "normal_z4.xmod"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let xm = twogroups::codec::decode_xmod(&text).unwrap();
        assert_eq!(twogroups::codec::encode_xmod(&xm), text, "{name}");
    }
    for name in ["doubling_z4.chain", "split_z2.chain"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let chain = twogroups::codec::decode_chain(&text).unwrap();
        assert_eq!(twogroups::codec::encode_chain(&chain), text, "{name}");
    }
}
