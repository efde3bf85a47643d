//! Acceptance: identical invocations with equal seeds produce byte-identical
//! reports, across every subcommand.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[String]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_11_reports_are_deterministic() {
    let started = Instant::now();
    let invocations: Vec<Vec<String>> = vec![
        vec![
            "cohomology".into(),
            "compute".into(),
            "--n".into(),
            "3".into(),
            fixture("z2.group").display().to_string(),
            fixture("z2.group").display().to_string(),
            fixture("trivial_z2_z2.action").display().to_string(),
        ],
        vec![
            "grcat".into(),
            "equiv".into(),
            fixture("zero.grcat").display().to_string(),
            fixture("xyz.grcat").display().to_string(),
        ],
        vec![
            "grcat".into(),
            "equiv".into(),
            fixture("xyz.grcat").display().to_string(),
            fixture("xyz.grcat").display().to_string(),
        ],
        vec![
            "xmod".into(),
            "skeletalize".into(),
            fixture("twisted.xmod").display().to_string(),
        ],
        vec![
            "pic".into(),
            "invariants".into(),
            fixture("doubling_z4.chain").display().to_string(),
        ],
        vec![
            "nerve".into(),
            "build".into(),
            "--dim".into(),
            "3".into(),
            "--homology".into(),
            fixture("s3.group").display().to_string(),
        ],
        vec![
            "nerve".into(),
            "build".into(),
            "--dim".into(),
            "3".into(),
            "--homology".into(),
            fixture("normal_z4.xmod").display().to_string(),
        ],
        vec![
            "coherence".into(),
            "check".into(),
            "--n".into(),
            "4".into(),
            "--seed".into(),
            "7".into(),
            fixture("xyz.grcat").display().to_string(),
        ],
        vec![
            "coherence".into(),
            "check".into(),
            "--seed".into(),
            "7".into(),
            fixture("xyz.grcat").display().to_string(),
            "((a*b)*c)*d".into(),
            "a*(b*(c*d))".into(),
        ],
    ];
    for args in &invocations {
        let first = run(args);
        let second = run(args);
        assert_eq!(
            first.stdout, second.stdout,
            "stdout differs between runs of {args:?}"
        );
        assert_eq!(
            first.stderr, second.stderr,
            "stderr differs between runs of {args:?}"
        );
        assert_eq!(first.status.code(), second.status.code());
    }
    // A different seed is allowed to change random-path internals but the
    // verdict lines must stay stable for a coherent category.
    let mut reseeded = invocations.last().unwrap().clone();
    reseeded[3] = "8".into();
    assert_eq!(run(&reseeded).status.code(), Some(0));

    println!(
        "ACCEPTANCE 11 deterministic-reports: PASS ({}ms)",
        started.elapsed().as_millis()
    );
}
