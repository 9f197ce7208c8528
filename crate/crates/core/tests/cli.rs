use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyprod"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("binary runs")
}

const CASES: &[(&str, &[&str])] = &[
    ("dual_simplex", &["dual", "simplex3.txt"]),
    ("dual_empty_face", &["dual", "empty_face1.txt"]),
    ("dual_boundary", &["dual", "boundary3.txt"]),
    ("homology_boundary", &["homology", "boundary3.txt"]),
    ("homology_empty_face", &["homology", "empty_face1.txt"]),
    ("homology_rp2", &["homology", "rp2.txt"]),
    ("homology_rp2_f2", &["homology", "rp2.txt", "--coeff", "p:2"]),
    ("homology_rp2_q", &["homology", "rp2.txt", "--coeff", "q"]),
    ("cohomology_rp2", &["homology", "rp2.txt", "--cohomology"]),
    ("compose_boundaries", &["compose", "boundary2.txt", "boundary2.txt", "boundary2.txt"]),
    ("compose_single", &["compose", "empty_face1.txt", "boundary3.txt"]),
    ("compose_void", &["compose", "void2.txt", "boundary2.txt", "boundary2.txt"]),
    (
        "compose_general",
        &["compose", "boundary2.txt", "simplex2.txt", "boundary2.txt", "simplex2.txt", "boundary2.txt", "--pairs", "general"],
    ),
    ("hochster_boundary", &["hochster", "boundary2.txt"]),
    ("hochster_simplex", &["hochster", "simplex2.txt"]),
    ("hochster_void", &["hochster", "void2.txt"]),
    (
        "hochster_list",
        &["hochster", "boundary2.txt", "--pairs", "list", "--pair", "sigma={} omega={1,2}", "--pair", "sigma={1} omega={}"],
    ),
    ("moment_zero_sphere", &["moment-angle", "empty_face1.txt", "--pairs", "1:0"]),
    ("moment_four_spheres", &["moment-angle", "boundary2.txt", "--pairs", "1:0,1:0"]),
    ("moment_void", &["moment-angle", "void2.txt", "--pairs", "1:0,1:0"]),
    ("verify_dual", &["verify", "dual", "--max-vertices", "5", "--seed", "7", "--trials", "20"]),
];

#[test]
fn golden_outputs() {
    for (name, args) in CASES {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let expected = std::fs::read_to_string(golden_dir().join(format!("{name}.out"))).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{name}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["verify", "sphere-duality", "--max-vertices", "4", "--trials", "10", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["hochster", "rp2.txt"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn input_errors_exit_two() {
    let cases: &[(&[&str], &str)] = &[
        (&["dual", "boundary3.txt", "--relative-to", "1,2"], "vertex 3"),
        (&["verify", "nope"], "unknown verification suite"),
        (&["homology", "rp2.txt", "--coeff", "p:4"], "not a prime"),
        (&["homology", "missing.txt"], "missing.txt"),
        (&["compose", "boundary2.txt", "boundary2.txt"], "block mismatch"),
        (&["moment-angle", "boundary2.txt", "--pairs", "1:2,1:0"], "violates"),
        (&["moment-angle", "boundary2.txt", "--pairs", "1:0"], "expected 2"),
        (&["hochster", "boundary2.txt", "--pairs", "list", "--pair", "sigma={1} omega={1}"], "share vertex 1"),
        (&["bogus"], ""),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn verify_reports_trial_lines() {
    let out = run(&["verify", "alexander", "--max-vertices", "5", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    for (i, line) in lines[..5].iter().enumerate() {
        assert_eq!(*line, format!("TRIAL {i} alexander PASS"));
    }
    assert_eq!(lines[5], "alexander 5/5 trials passed: PASS");
}
