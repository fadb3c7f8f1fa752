use std::io::Write;
use std::process::{Command, Stdio};

use fmasa_cli::json::FamilyFile;
use fmasa_cli::report::{Report, Verdict};
use fmasa_cli::verify::reverify;
use frobenius_masa::decide::DecisionConfig;

fn fmasa(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fmasa"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn corpus(args: &[&str]) -> String {
    let mut full = vec!["corpus"];
    full.extend_from_slice(args);
    let (code, out, err) = fmasa(&full, "");
    assert_eq!(code, 0, "{err}");
    out
}

#[test]
fn gerstenhaber_closure_pipe() {
    let (code, out, _) = fmasa(&["closure", "-"], &corpus(&["gerstenhaber4"]));
    assert_eq!(code, 0);
    assert!(out.starts_with("closure: pass  dim 5"), "{out}");
}

#[test]
fn d0_derivations_pipe() {
    let (code, out, _) = fmasa(&["derive", "-"], &corpus(&["D0", "3"]));
    assert_eq!(code, 0);
    assert!(out.contains("direct 8, via normalizer 8"), "{out}");
}

#[test]
fn ln_orbit_pipe() {
    let (code, out, _) = fmasa(&["orbit", "-"], &corpus(&["Ln", "3"]));
    assert_eq!(code, 0);
    assert!(out.contains("no open orbit; certificate: det ≡ 0"), "{out}");
}

#[test]
fn inapplicable_exit_code() {
    let (code, out, _) = fmasa(&["frobenius", "-"], &corpus(&["winternitz", "4"]));
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("det(dα) ≡ 0"));
}

#[test]
fn failing_check_exit_code() {
    let file = r#"{"n": 2, "generators": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]}"#;
    let (code, out, _) = fmasa(&["check", "-"], file);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("commuting: fail"));
}

#[test]
fn input_errors() {
    let (code, _, err) = fmasa(&["closure", "-"], "{\"n\": 2,\n \"generators\": [[[1, 0], [0, \"x\"]]]}");
    assert_eq!(code, 2);
    assert!(err.contains("line 2") && err.contains("bad rational"), "{err}");
    let (code, _, err) = fmasa(&["closure", "-"], "{\"n\": 2, \"generators\": [[[1, 0, 0], [0, 1, 0]]]}");
    assert_eq!(code, 2);
    assert!(err.contains("not square"), "{err}");
    let (code, _, err) = fmasa(&["closure", "-"], "{\"n\": 2,");
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
    let (code, _, _) = fmasa(&["corpus", "D01", "3"], "");
    assert_eq!(code, 2);
    let (code, _, _) = fmasa(&["closure", "/nonexistent/file.json"], "");
    assert_eq!(code, 2);
    let (code, _, _) = fmasa(&["frobnicate"], "");
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let input = corpus(&["BnnPrime", "4"]);
    for cmd in ["orbit", "frobenius", "classify", "build"] {
        let a = fmasa(&["--format", "json", "--seed", "7", cmd, "-"], &input);
        let b = fmasa(&["--format", "json", "--seed", "7", cmd, "-"], &input);
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn report_round_trip() {
    let cfg = DecisionConfig::default();
    let cases: &[&[&str]] =
        &[&["D0", "3"], &["Ln", "3"], &["winternitz", "4"], &["B42"], &["circperm", "5"], &["affC"], &["Bnn", "4"]];
    for case in cases {
        let input = corpus(case);
        let family = FamilyFile::parse(&input).unwrap();
        for cmd in ["closure", "check", "orbit", "build", "frobenius", "classify", "derive"] {
            let (_, out, err) = fmasa(&["--format", "json", cmd, "-"], &input);
            let report: Report = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{case:?} {cmd}: {e} {err}"));
            let reparsed: Report = serde_json::from_str(&report.to_json()).unwrap();
            assert_eq!(reparsed, report);
            let recomputed = reverify(&report, Some(&family), &cfg).unwrap();
            let recorded: Vec<Verdict> = report.records.iter().map(|r| r.verdict).collect();
            assert_eq!(recomputed, recorded, "{case:?} {cmd}");
        }
    }
}

#[test]
fn verify_command_flags_tampering() {
    let input = corpus(&["B31"]);
    let dir = std::env::temp_dir().join(format!("fmasa-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let family = dir.join("b31.json");
    std::fs::write(&family, &input).unwrap();
    let (_, out, _) = fmasa(&["--format", "json", "orbit", family.to_str().unwrap()], "");
    let (code, _, _) = fmasa(&["verify", "-", family.to_str().unwrap()], &out);
    assert_eq!(code, 0);
    let tampered = out.replacen("\"determinant\": 1", "\"determinant\": 2", 1);
    assert_ne!(tampered, out);
    let (code, text, _) = fmasa(&["verify", "-", family.to_str().unwrap()], &tampered);
    assert_eq!(code, 1, "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corpus_file_round_trips() {
    let text = corpus(&["cartan_form", "5", "2"]);
    let f = FamilyFile::parse(&text).unwrap();
    assert_eq!(f.n, 5);
    assert_eq!(f.basis.as_ref().unwrap().len(), 5);
    assert_eq!(serde_json::to_string_pretty(&f).unwrap() + "\n", text);
}

/// The `$ fmasa ... | fmasa ... -` examples in the guide, run for real.
#[test]
fn book_examples_match() {
    let text = include_str!("../../../book/src/cli.md");
    let lines: Vec<&str> = text.lines().collect();
    let mut checked = 0;
    for (i, line) in lines.iter().enumerate() {
        let Some(cmd) = line.strip_prefix("$ ") else {
            continue;
        };
        let stages: Vec<&str> = cmd.split(" | ").collect();
        let mut data = String::new();
        let mut head = None;
        for stage in stages {
            if let Some(k) = stage.strip_prefix("head -") {
                head = Some(k.parse::<usize>().unwrap());
                continue;
            }
            let args: Vec<&str> = stage.split_whitespace().skip(1).collect();
            data = fmasa(&args, &data).1;
        }
        let got: Vec<&str> = data.lines().take(head.unwrap_or(usize::MAX)).collect();
        let want: Vec<&str> = lines[i + 1..].iter().take_while(|l| !l.starts_with("$ ") && !l.starts_with("```")).copied().collect();
        assert_eq!(got, want, "{cmd}");
        checked += 1;
    }
    assert_eq!(checked, 3);
}
