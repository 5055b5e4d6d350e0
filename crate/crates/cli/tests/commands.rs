use std::path::Path;
use std::process::{Command, Output};

use kroncode::analyze::{analyze, AnalysisConfig};
use kroncode::kron_cr_code;
use kroncode_cli::{CodeFile, ReportFile};
use tempfile::TempDir;

fn kroncode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kroncode"))
        .args(args)
        .env_remove("KRONCODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path = dir.path().join(name);
    let path = path.to_str().unwrap().to_string();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = kroncode(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn report(path: &str) -> ReportFile {
    let o = kroncode(&["analyze", path]);
    assert_eq!(o.status.code(), Some(0));
    ReportFile::from_json(&stdout(&o)).unwrap()
}

#[test]
fn construct_prints_parameters() {
    let dir = TempDir::new().unwrap();
    let cases: [(&[&str], &str); 3] = [
        (&["cr", "--q", "2", "--ma", "2", "--mb", "3"], "[21,15,3]_2"),
        (&["up", "--q", "2", "--na", "4", "--m", "3"], "[28,19,3]_2"),
        (&["hamming", "--q", "4", "--m", "2"], "[5,3,3]_4"),
    ];
    for (i, (args, want)) in cases.iter().enumerate() {
        let out = dir.path().join(format!("{i}.json"));
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", out.to_str().unwrap()]);
        let o = kroncode(&full);
        assert!(o.status.success());
        assert!(stdout(&o).starts_with(want), "{}", stdout(&o));
    }
    let file =
        CodeFile::from_json(&std::fs::read_to_string(dir.path().join("0.json")).unwrap()).unwrap();
    assert_eq!((file.h.rows, file.h.cols), (6, 21));
    let gf4 =
        CodeFile::from_json(&std::fs::read_to_string(dir.path().join("2.json")).unwrap()).unwrap();
    assert_eq!(gf4.modulus, Some(vec![1, 1, 1]));
}

#[test]
fn construct_errors() {
    assert_eq!(
        kroncode(&["construct", "cr", "--q", "2", "--ma", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        kroncode(&["construct", "hamming", "--q", "6", "--m", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        kroncode(&["construct", "nope", "--q", "2"]).status.code(),
        Some(1)
    );
}

#[test]
fn analyze_cr_code() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        &dir,
        "c.json",
        &["cr", "--q", "2", "--ma", "2", "--mb", "2"],
    );
    let r = report(&path);
    assert_eq!(r.rho, 2);
    assert!(r.verdicts.completely_regular);
    let arr = r.intersection_array.unwrap();
    assert_eq!((arr.b, arr.c), (vec![9, 4], vec![1, 6]));
    assert!(r.witness.is_none());
}

#[test]
fn analyze_ternary_up_code() {
    let dir = TempDir::new().unwrap();
    let path = construct(&dir, "t.json", &["up", "--q", "3", "--na", "3", "--m", "2"]);
    let r = report(&path);
    assert_eq!((r.rho, r.s), (2, 2));
    assert!(r.verdicts.uniformly_packed);
    assert!(r.verdicts.completely_regular);
    let arr = r.intersection_array.unwrap();
    assert_eq!((arr.b, arr.c), (vec![24, 14], vec![1, 6]));
}

#[test]
fn analyze_binary_up_code_has_witness() {
    let dir = TempDir::new().unwrap();
    let path = construct(&dir, "b.json", &["up", "--q", "2", "--na", "4", "--m", "3"]);
    let r = report(&path);
    assert_eq!((r.rho, r.s), (3, 3));
    assert!(r.verdicts.uniformly_packed && !r.verdicts.completely_regular);
    let w = r.witness.unwrap();
    assert_ne!(w.first.down, w.second.down);
    assert_eq!(r.dual_weights.len(), 3);
}

#[test]
fn csv_output() {
    let dir = TempDir::new().unwrap();
    let path = construct(&dir, "h.json", &["hamming", "--q", "2", "--m", "3"]);
    let o = kroncode(&["analyze", &path, "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            ReportFile::CSV_HEADER,
            "hamming,2,7,4,3,1,1,true,true,7,1,0;6,1/1;1/1,4"
        ]
    );
}

#[test]
fn budget_exceeded_exit_code() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        &dir,
        "a.json",
        &["cr", "--q", "2", "--ma", "3", "--mb", "3"],
    );
    let o = kroncode(&["analyze", &path, "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_kroncode"))
        .args(["analyze", &path])
        .env("KRONCODE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn analyze_io_errors() {
    assert_eq!(
        kroncode(&["analyze", "/nonexistent/x.json"]).status.code(),
        Some(1)
    );
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format_version\": 1}").unwrap();
    assert_eq!(
        kroncode(&["analyze", bad.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn report_to_file_and_timing() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        &dir,
        "c.json",
        &["cr", "--q", "3", "--ma", "2", "--mb", "2"],
    );
    let out = dir.path().join("r.json");
    let o = kroncode(&["analyze", &path, "--report", out.to_str().unwrap()]);
    assert!(o.status.success());
    let r = ReportFile::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(r.timing_ms.is_none());
    let o = kroncode(&["analyze", &path, "--timing"]);
    assert!(ReportFile::from_json(&stdout(&o))
        .unwrap()
        .timing_ms
        .is_some());
}

#[test]
fn verify_cr_default_grid_passes() {
    let o = kroncode(&["verify", "cr"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("PASS").count(), 7);
}

#[test]
fn verify_custom_grid() {
    let o = kroncode(&["verify", "up", "--grid", "2,4,3;3,4,2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.contains(",pass,")).count(),
        2
    );
    assert_eq!(
        kroncode(&["verify", "cr", "--grid", "2,2"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_up_default_grid_reports_ternary_mismatch() {
    let o = kroncode(&["verify", "up"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails, ["FAIL  GF(3) kron_up(n_a=3, m=2)"]);
}

#[test]
fn verify_corrupted_code_fails() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        &dir,
        "c.json",
        &["cr", "--q", "2", "--ma", "2", "--mb", "2"],
    );
    let o = kroncode(&["verify", "--code", &path]);
    assert_eq!(o.status.code(), Some(0));

    let mut file = CodeFile::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cols = file.h.cols;
    // make column 1 a copy of column 0
    for r in 0..file.h.rows {
        file.h.entries[r * cols + 1] = file.h.entries[r * cols];
    }
    std::fs::write(&path, file.to_json()).unwrap();
    let o = kroncode(&["verify", "--code", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn repro_cases() {
    let o = kroncode(&["repro", "binary28"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c = 4") && stdout(&o).contains("c = 2"));
    let o = kroncode(&["repro", "ternary12"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).matches("c = 6").count(), 2);
    assert_eq!(kroncode(&["repro", "unknown-case"]).status.code(), Some(1));
}

#[test]
fn file_round_trip_matches_in_memory_pipeline() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        &dir,
        "c.json",
        &["cr", "--q", "3", "--ma", "2", "--mb", "2"],
    );
    let spec = kron_cr_code(3, 2, 2).unwrap();
    let loaded = CodeFile::from_json(&std::fs::read_to_string(&path).unwrap())
        .unwrap()
        .to_spec()
        .unwrap();
    assert_eq!(loaded.check_matrix(), spec.check_matrix());
    assert_eq!(loaded.family(), spec.family());
    let direct = analyze(&spec, &AnalysisConfig::default()).unwrap();
    let expected = ReportFile::new(&spec, &direct).unwrap().to_json();
    assert_eq!(stdout(&kroncode(&["analyze", &path])), expected);
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let path = construct(&dir, "u.json", &["up", "--q", "2", "--na", "4", "--m", "3"]);
    let a = kroncode(&["analyze", &path]).stdout;
    let b = kroncode(&["analyze", &path]).stdout;
    assert_eq!(a, b);
    let again = construct(
        &dir,
        "u2.json",
        &["up", "--q", "2", "--na", "4", "--m", "3"],
    );
    assert_eq!(
        std::fs::read(Path::new(&path)).unwrap(),
        std::fs::read(Path::new(&again)).unwrap()
    );
}
