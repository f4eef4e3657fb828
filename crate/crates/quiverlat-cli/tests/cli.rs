//! End-to-end checks of the binary: exit codes, header contents, golden
//! output for the known rows, seed resolution, and the show round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quiverlat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn workspace_seed() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../seeds/4_1.qseed")
}

#[test]
fn seq_golden_figure_eight() {
    let out = run(&[
        "seq", "--family", "neg-twist", "--p", "-1", "--framing", "0", "--kmax", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (header, body): (Vec<&str>, Vec<&str>) =
        text.lines().partition(|l| l.starts_with('#'));
    assert_eq!(
        body,
        vec!["k\tN_k", "0\t1", "1\t1", "2\t3", "3\t12", "4\t55"]
    );
    let joined = header.join("\n");
    for needle in [
        "family=neg-twist",
        "p=-1",
        "knot=4_1",
        "framing=0",
        "mode=a0q1",
        "q-exp-convention=qbar",
        "node0-rule=shifted",
        "tower-rule=explicit",
        "checksum=sha256:",
        "closed-form=match",
        "path-count=match",
    ] {
        assert!(joined.contains(needle), "missing {needle} in:\n{joined}");
    }
}

#[test]
fn seq_reports_divergence_for_deeper_towers() {
    let out = run(&[
        "seq", "--family", "neg-twist", "--p", "-3", "--framing", "5", "--kmax", "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("closed-form=MISMATCH"));
    assert!(text.contains("path-count=MISMATCH"));
    assert!(text.ends_with("0\t1\n1\t0\n2\t0\n3\t0\n4\t0\n"));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--family", "neg-twist", "--p", "-1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("# verdict: all cells agree"));

    let bad = run(&["verify", "--family", "neg-twist", "--p", "-2"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains('\u{2717}'));
    assert!(text.contains("# cell f=0 k=1: quiver=0 closed=3 paths=3"));

    let trivial = run(&["verify", "--family", "neg-twist", "--p", "-1", "--kmax", "0"]);
    assert_eq!(trivial.status.code(), Some(0));
}

#[test]
fn verify_without_seed_compares_remaining_legs() {
    let out = bin()
        .args(["verify", "--family", "pos-twist", "--p", "2"])
        .env_remove("QUIVERLAT_SEED_DIR")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("seed=none"));
    assert!(text.contains("# verdict: all cells agree"));
}

#[test]
fn pipeline_errors_exit_2_with_stage_tags() {
    let torus = run(&["seq", "--family", "torus-2", "--p", "1"]);
    assert_eq!(torus.status.code(), Some(2));
    assert!(stderr(&torus).starts_with("error[tower]:"));

    let framing = run(&[
        "seq", "--family", "neg-twist", "--p", "-1", "--framing", "9",
    ]);
    assert_eq!(framing.status.code(), Some(2));
    let msg = stderr(&framing);
    assert!(msg.starts_with("error[tower]:"));
    assert!(msg.contains("--allow-untabulated"));

    let noseed = bin()
        .args(["seq", "--family", "pos-twist", "--p", "2"])
        .env_remove("QUIVERLAT_SEED_DIR")
        .output()
        .unwrap();
    assert_eq!(noseed.status.code(), Some(2));
    assert!(stderr(&noseed).starts_with("error[io]:"));

    let steps = run(&["paths", "--family", "neg-twist", "--p", "-1", "--steps", "END"]);
    assert_eq!(steps.status.code(), Some(2));
    assert!(stderr(&steps).starts_with("error[cli]:"));

    let broken = run(&["quiver", "show", "--seed", "/nonexistent.qseed"]);
    assert_eq!(broken.status.code(), Some(2));
    assert!(stderr(&broken).starts_with("error[io]:"));
}

#[test]
fn allow_untabulated_drops_the_cross_check() {
    let out = run(&[
        "seq", "--family", "neg-twist", "--p", "-1", "--framing", "9", "--kmax", "2",
        "--allow-untabulated",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("closed-form=untabulated"));
    assert!(text.contains("path-count=untabulated"));
}

#[test]
fn paths_and_raney_agree_on_a_tabulated_row() {
    let paths = run(&[
        "paths", "--family", "pos-twist", "--p", "2", "--framing", "1", "--kmax", "4",
    ]);
    let raney = run(&[
        "raney", "--family", "pos-twist", "--p", "2", "--framing", "1", "--kmax", "4",
    ]);
    assert!(paths.status.success() && raney.status.success());
    let rows = |out: &Output| -> Vec<(String, String)> {
        stdout(out)
            .lines()
            .filter(|l| !l.starts_with('#'))
            .skip(1)
            .map(|l| {
                let mut it = l.split('\t');
                (it.next().unwrap().to_string(), it.next().unwrap().to_string())
            })
            .collect()
    };
    assert_eq!(rows(&paths), rows(&raney));
    assert_eq!(rows(&paths)[4], ("4".to_string(), "1771".to_string()));
}

#[test]
fn torus_paths_both_step_sets() {
    let en = run(&["paths", "--family", "torus-2", "--p", "1", "--kmax", "1"]);
    assert!(stdout(&en).ends_with("0\t1\n1\t2\n"));
    let end = run(&[
        "paths", "--family", "torus-2", "--p", "1", "--kmax", "1", "--steps", "END",
    ]);
    assert!(stdout(&end).ends_with("0\t1\n1\t6\n"));
}

#[test]
fn quiver_show_round_trips_through_the_parser() {
    let shown = run(&["quiver", "show", "--family", "neg-twist", "--p", "-2"]);
    assert!(shown.status.success());
    let text = stdout(&shown);
    let seed_part: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    let parsed = quiverlat::parse_seed(&seed_part).expect("output parses as a seed");
    assert_eq!(parsed.name, "6_1");
    assert_eq!(parsed.quiver.size(), 10);
    let spec =
        quiverlat::KnotFamilySpec::new(quiverlat::KnotFamily::NegTwist, -2).unwrap();
    let rebuilt = quiverlat::build_tower(
        &quiverlat::builtin_seed_4_1(),
        &spec,
        1,
        Default::default(),
        Default::default(),
    )
    .unwrap();
    assert_eq!(parsed.quiver, rebuilt);
}

#[test]
fn seed_dir_resolution_matches_builtin() {
    let dir = std::env::temp_dir().join("quiverlat-seed-dir-test");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(workspace_seed(), dir.join("4_1.qseed")).unwrap();
    let via_dir = bin()
        .args(["seq", "--family", "neg-twist", "--p", "-1", "--kmax", "3"])
        .env("QUIVERLAT_SEED_DIR", &dir)
        .output()
        .unwrap();
    let via_builtin = bin()
        .args(["seq", "--family", "neg-twist", "--p", "-1", "--kmax", "3"])
        .env_remove("QUIVERLAT_SEED_DIR")
        .output()
        .unwrap();
    assert!(via_dir.status.success() && via_builtin.status.success());
    let strip_seed_line = |out: &Output| -> Vec<String> {
        stdout(out)
            .lines()
            .filter(|l| !l.starts_with("# seed="))
            .map(str::to_string)
            .collect()
    };
    // Same checksum, same rows; only the seed label differs.
    assert_eq!(strip_seed_line(&via_dir), strip_seed_line(&via_builtin));
    let line = |out: &Output| {
        stdout(out)
            .lines()
            .find(|l| l.starts_with("# seed="))
            .unwrap()
            .to_string()
    };
    assert!(line(&via_dir).contains("4_1.qseed"));
    assert!(line(&via_builtin).contains("builtin:4_1"));
    let checksum = |s: &str| s.split("checksum=").nth(1).unwrap().to_string();
    assert_eq!(checksum(&line(&via_dir)), checksum(&line(&via_builtin)));
}

#[test]
fn explicit_seed_flag_wins() {
    let out = run(&[
        "seq",
        "--family",
        "neg-twist",
        "--p",
        "-1",
        "--kmax",
        "2",
        "--seed",
        workspace_seed().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("seeds/4_1.qseed"));
}

#[test]
fn tower_build_prints_the_plan() {
    let out = run(&["tower", "build", "--family", "neg-twist", "--p", "-3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("step\ttargets\tsize-after"));
    assert!(text.contains("1\t2,3,4,5\t10"));
    assert!(text.contains("2\t6,7,8,9\t14"));
}

#[test]
fn full_mode_prints_laurent_rows() {
    let out = run(&[
        "seq", "--family", "neg-twist", "--p", "-1", "--kmax", "1", "--mode", "full",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("k\tN_k(a,q)"));
    assert!(text.contains("0\t(1)"));
    assert!(text.contains("1\t(q^-2)"));
}
