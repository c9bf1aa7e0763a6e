//! Golden-file tests: every CLI surface runs once and its stdout must
//! match a checked-in file byte for byte.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {}", path.display(), e))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birack-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_golden(args: &[&str], golden_name: &str) {
    let out = run(args);
    assert!(
        out.status.success(),
        "exit {:?} for {:?}: {}",
        out.status.code(),
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, golden(golden_name), "stdout mismatch for {:?}", args);
}

#[test]
fn bracket_polynomial_text_and_json() {
    let d = fixture("trefoil3.gauss");
    let x = fixture("cyclic3.brk");
    let b = fixture("cyclic3_z5.bbr");
    assert_golden(&["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b], "cyclic3_bracket.txt");
    assert_golden(
        &["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b, "--format", "json"],
        "cyclic3_bracket.json",
    );
}

#[test]
fn gaussian_bracket_polynomial() {
    let d = fixture("hopf_framed.gauss");
    let x = fixture("swapfix3.brk");
    let b = fixture("swapfix3_gauss.bbr");
    assert_golden(&["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b], "swapfix3_bracket.txt");
    assert_golden(
        &["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b, "--format", "json"],
        "swapfix3_bracket.json",
    );
}

#[test]
fn color_count_and_json() {
    assert_golden(
        &[
            "color",
            "--diagram",
            &fixture("trefoil4.gauss"),
            "--birack",
            &fixture("cyclic3.brk"),
            "--count",
        ],
        "trefoil4_count.txt",
    );
    assert_golden(
        &[
            "color",
            "--diagram",
            &fixture("trefoil3.gauss"),
            "--birack",
            &fixture("cyclic3.brk"),
            "--format",
            "json",
        ],
        "trefoil3_colorings.json",
    );
}

#[test]
fn quiver_polynomials_and_dot() {
    let d = fixture("trefoil3.gauss");
    let x = fixture("cyclic3.brk");
    let b = fixture("cyclic3_z5.bbr");
    let base = ["quiver", "--diagram", d.as_str(), "--birack", x.as_str(), "--bracket", b.as_str(), "--endos", "2,3,1"];
    let with = |extra: &[&str], name: &str| {
        let mut args: Vec<&str> = base.to_vec();
        args.extend_from_slice(extra);
        assert_golden(&args, name);
    };
    with(&["--poly", "deg"], "quiver_deg.txt");
    with(&["--poly", "two"], "quiver_two.txt");
    with(&["--poly", "mp"], "quiver_mp.txt");
    with(&["--format", "dot"], "quiver_dot.txt");
}

#[test]
fn quiver_json_dump() {
    assert_golden(
        &[
            "quiver",
            "--diagram",
            &fixture("hopf_framed.gauss"),
            "--birack",
            &fixture("swapfix3.brk"),
            "--bracket",
            &fixture("swapfix3_gauss.bbr"),
            "--endos",
            "3,3,3;2,1,3",
            "--format",
            "json",
        ],
        "quiver_hopf.json",
    );
}

#[test]
fn endomorphism_listing() {
    assert_golden(&["endos", "--birack", &fixture("swapfix3.brk")], "endos_swapfix3.txt");
}

#[test]
fn validate_birack_output_and_exit_codes() {
    assert_golden(&["validate-birack", &fixture("z4.brk")], "validate_z4.txt");
    // A non-bijective table exits 1 and names the axiom with a witness.
    let out = run(&["validate-birack", &fixture("bad.brk")]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("axiom (ii)"), "stderr: {}", stderr);
    assert!(stderr.contains("column 1"), "stderr: {}", stderr);
}

#[test]
fn validate_bracket_output_and_rejection() {
    assert_golden(
        &[
            "validate-bracket",
            "--birack",
            &fixture("tau3.brk"),
            "--bracket",
            &fixture("tau3_laurent.lbr"),
        ],
        "validate_tau3.txt",
    );
    let out = run(&[
        "validate-bracket",
        "--birack",
        &fixture("swapfix3.brk"),
        "--bracket",
        &fixture("swapfix3_gauss_uncorrected.bbr"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("loop value differs"), "stderr: {}", stderr);
    assert!(stderr.contains("(3,3)"), "stderr: {}", stderr);
}

#[test]
fn perturb_is_seed_deterministic() {
    let args = [
        "perturb",
        "--diagram",
        &fixture("trefoil3.gauss"),
        "--move",
        "r2",
        "--seed",
        "7",
    ];
    assert_golden(&args, "perturb_r2_seed7.txt");
}

#[test]
fn search_brackets_streams_blocks() {
    let out = run(&[
        "search-brackets",
        "--birack",
        &fixture("trivial1.brk"),
        "--ring",
        "Z5",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    // Eight unit pairs with nonzero loop value, one [A|B] block each.
    assert_eq!(stdout.matches("Z5").count(), 8);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("8 bracket(s)"));
}

#[test]
fn fully_seeded_search_validates_one_matrix() {
    let out = run(&[
        "search-brackets",
        "--birack",
        &fixture("cyclic3.brk"),
        "--ring",
        "Z5",
        "--seed",
        &fixture("cyclic3_z5_seed.sbr"),
    ]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("search_seeded.txt"));
}

#[test]
fn partially_seeded_search_completes_the_matrix() {
    let out = run(&[
        "search-brackets",
        "--birack",
        &fixture("cyclic3.brk"),
        "--ring",
        "Z5",
        "--seed",
        &fixture("cyclic3_partial_seed.sbr"),
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    // Both completions extend the seeded A block.
    assert!(String::from_utf8(out.stderr).unwrap().contains("2 bracket(s)"));
    assert!(stdout.contains("1 2 1 1 2 1"));
}

#[test]
fn endos_and_json_validation_goldens() {
    assert_golden(&["endos", "--birack", &fixture("parity4.brk")], "endos_parity4.txt");
    assert_golden(
        &["validate-birack", &fixture("z4.brk"), "--format", "json"],
        "validate_z4.json",
    );
}

#[test]
fn search_with_delta_filter_and_limit() {
    let out = run(&[
        "search-brackets",
        "--birack",
        &fixture("trivial1.brk"),
        "--ring",
        "Z5",
        "--delta",
        "3",
        "--limit",
        "2",
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("2 bracket(s)"), "stderr: {}", stderr);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["color", "--diagram"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jobs_flag_gives_identical_results() {
    let d = fixture("hopf_framed.gauss");
    let x = fixture("swapfix3.brk");
    let b = fixture("swapfix3_gauss.bbr");
    let one = run(&["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b, "--jobs", "1"]);
    let four = run(&["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b, "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
    // Environment variable fallback.
    let env_run = Command::new(env!("CARGO_BIN_EXE_birack-lab"))
        .args(["bracket", "--diagram", &d, "--birack", &x, "--bracket", &b])
        .env("BIRACK_LAB_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(one.stdout, env_run.stdout);
}
