use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qldpc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qldpc")).args(args).output().unwrap()
}

fn build_small(dir: &Path) -> String {
    let path = dir.join("small.txt").to_string_lossy().into_owned();
    let out = qldpc(&["build-code", "--kind", "bicycle", "--n", "120", "--m", "60", "--w", "10", "--seed", "0", "--out", &path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn build_code_records_provenance_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_small(dir.path());
    let text = fs::read_to_string(&path).unwrap();
    let comments: Vec<&str> = text.lines().take_while(|l| l.starts_with('#')).collect();
    assert_eq!(comments[0], "# bicycle n=120 m=60 w=10 seed=0");
    assert!(comments[1].starts_with("# [[120, 60]]"));
    assert!(comments[2].starts_with("# 4-cycles"));

    let out = qldpc(&["validate", "--code", &path]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("k: 60"));
    assert!(stdout.contains("commutation: ok"));
}

#[test]
fn validate_rejects_anticommuting_generators() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    // generators X and Z on the same qubit
    fs::write(&path, "1 2 custom 0\n2 1\n0\n\n2 1\n\n0\n").unwrap();
    let out = qldpc(&["validate", "--code", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("commutation: FAILED"));
}

fn sim(code: &str, extra: &[&str]) -> String {
    let mut args = vec![
        "sim", "--code", code, "--decoder", "aug-gf2", "--attempts", "3", "--p", "0.01,0.02", "--min-errors", "5",
        "--max-trials", "2000", "--seed", "42", "--no-timing",
    ];
    args.extend_from_slice(extra);
    let out = qldpc(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sim_csv_is_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let code = build_small(dir.path());
    let one = sim(&code, &["--threads", "1"]);
    let many = sim(&code, &["--threads", "8"]);
    assert_eq!(one, many);
    let mut lines = one.lines();
    assert_eq!(
        lines.next().unwrap(),
        "code,kind,n,k,channel,p,decoder,delta,N,imax,seed,trials,detected,undetected,fer,fer_stderr,norm_fer,avg_iters,avg_attempts,wall_s"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), 20);
    assert_eq!(&row[..11], &["small", "bicycle", "120", "60", "depolarizing", "0.01", "aug-gf2", "0.1", "3", "100", "42"]);
    assert_eq!(row[16], "");
    assert_eq!(row[19], "");
}

#[test]
fn sim_with_baseline_writes_normalized_fer_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let code = build_small(dir.path());
    let out = dir.path().join("r.csv");
    sim(&code, &["--baseline", "gf2", "--out", out.to_str().unwrap()]);
    let text = fs::read_to_string(out).unwrap();
    for line in text.lines().skip(1) {
        let norm: f64 = line.split(',').nth(16).unwrap().parse().unwrap();
        assert!(norm > 0.0 && norm <= 1.0, "{line}");
    }
}

#[test]
fn sim_rejects_bad_arguments() {
    let dir = tempfile::tempdir().unwrap();
    let code = build_small(dir.path());
    for args in [
        vec!["sim", "--code", code.as_str(), "--decoder", "bp-osd", "--p", "0.01"],
        vec!["sim", "--code", code.as_str(), "--decoder", "gf2", "--p", "1.5"],
        vec!["sim", "--code", code.as_str(), "--decoder", "aug-gf2", "--p", "0.01", "--baseline", "aug-gf4"],
        vec!["sim", "--code", code.as_str(), "--decoder", "efb-gf4", "--channel", "xz", "--p", "0.01"],
    ] {
        assert!(!qldpc(&args).status.success(), "{args:?}");
    }
}
