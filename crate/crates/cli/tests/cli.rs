use std::process::{Command, Output};

use perfect_ntt::reference::{self, matrix};
use perfect_ntt::textio::{matrix_to_text, parse_matrix_file};
use perfect_ntt::transforms::TransformForm;

fn pntt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pntt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = pntt(args);
    assert!(
        out.status.success(),
        "pntt {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn gen_cyclic_hamming_matches_reference() {
    let text = ok(&["gen", "--code", "hamming", "--p", "2", "--m", "3", "--form", "cyclic", "--lambda", "1"]);
    let file = parse_matrix_file(&text).unwrap();
    assert_eq!(file.matrix, matrix(2, &reference::CYCLIC_HAMMING_TRANSFORM));
    let header = file.header.unwrap();
    assert_eq!(header.form, TransformForm::Cyclic);
    assert_eq!(header.lambda, 1);
    assert!(text.ends_with(&matrix_to_text(&file.matrix)));
}

#[test]
fn gen_writes_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eg.json");
    ok(&["gen", "--code", "extended-golay", "--p", "3", "--json", "--output", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.trim_start().starts_with('{'));
    let m = parse_matrix_file(&text).unwrap().matrix;
    assert_eq!(m, matrix(3, &reference::EXTENDED_GOLAY_TRANSFORM));
}

#[test]
fn apply_zero_vector() {
    let out = ok(&["apply", "--code", "hamming", "--p", "2", "--vector", "0,0,0,0,0,0,0"]);
    assert_eq!(out.trim(), "0,0,0,0,0,0,0");
}

#[test]
fn apply_fixes_a_codeword() {
    // first row of the printed generator matrix
    let out = ok(&["apply", "--code", "hamming", "--p", "2", "--vector", "1,0,0,0,1,1,1"]);
    assert_eq!(out.trim(), "1,0,0,0,1,1,1");
}

#[test]
fn apply_then_invert_round_trips() {
    let vectors = [
        ("golay", "3", "cyclic", "1,2,0,0,1,2,2,0,1,1,0"),
        ("golay", "3", "standard", "2,2,2,2,2,2,2,2,2,2,2"),
        ("golay", "2", "cyclic", "1,0,1,1,0,0,0,1,1,1,0,1,0,0,1,1,0,1,0,1,1,1,0"),
        ("extended-golay", "3", "standard", "0,1,2,0,1,2,0,1,2,0,1,2"),
        ("hamming", "2", "standard", "1,1,0,1,0,0,1"),
    ];
    for (code, p, form, v) in vectors {
        let common = ["--code", code, "--p", p, "--form", form];
        let mut apply = vec!["apply"];
        apply.extend(common);
        apply.extend(["--vector", v]);
        let spectrum = ok(&apply);
        let spectrum = spectrum.trim();
        let mut invert = vec!["invert"];
        invert.extend(common);
        invert.extend(["--vector", spectrum]);
        assert_eq!(ok(&invert).trim(), v, "{code} p={p} {form}");
    }
}

#[test]
fn gen_output_reread_through_apply() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golay.txt");
    let path = path.to_str().unwrap();
    let code = ["--code", "golay", "--p", "3", "--form", "cyclic"];
    let mut gen = vec!["gen"];
    gen.extend(code);
    gen.extend(["--output", path]);
    ok(&gen);

    for v in ["1,0,0,0,0,0,0,0,0,0,0", "2,1,0,2,2,1,0,0,1,2,1", "1,1,1,1,1,1,1,1,1,1,1"] {
        for cmd in ["apply", "invert"] {
            let mut direct = vec![cmd];
            direct.extend(code);
            direct.extend(["--vector", v]);
            let from_file = ok(&[cmd, "--input", path, "--vector", v]);
            assert_eq!(from_file, ok(&direct), "{cmd} {v}");
        }
    }
}

#[test]
fn verify_ternary_cyclic_golay() {
    let out = pntt(&["verify", "--code", "golay", "--p", "3", "--form", "cyclic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order=242"), "{text}");
    assert!(text.contains("det≠0"), "{text}");
    assert!(text.contains("CHECK golden_matrix PASS"));
    assert!(!text.contains(" FAIL "));
}

#[test]
fn verify_reports_every_golden_transform() {
    for args in [
        ["--code", "hamming", "--p", "2", "--form", "standard"],
        ["--code", "hamming", "--p", "3", "--form", "standard"],
        ["--code", "hamming", "--p", "2", "--form", "cyclic"],
        ["--code", "golay", "--p", "2", "--form", "cyclic"],
        ["--code", "golay", "--p", "3", "--form", "standard"],
        ["--code", "golay", "--p", "3", "--form", "appendix"],
        ["--code", "extended-golay", "--p", "3", "--form", "standard"],
    ] {
        let mut cmd = vec!["verify", "--trials", "50"];
        cmd.extend(args);
        let text = ok(&cmd);
        assert!(text.contains("CHECK golden_matrix PASS"), "{args:?}\n{text}");
        assert!(text.lines().filter(|l| l.starts_with("CHECK")).all(|l| !l.contains(" FAIL ")));
    }
}

#[test]
fn info_prints_witness() {
    let text = ok(&["info", "--code", "golay", "--p", "2", "--form", "cyclic"]);
    assert!(text.contains("p=2 N=23 k=12 d=7"));
    assert!(text.contains("h(x)=x^12+x^11+x^10+x^9+x^8+x^5+x^2+1"));
    assert!(text.contains("perfect t=3"));

    let text = ok(&["info", "--code", "extended-golay", "--p", "3"]);
    assert!(text.contains("perfect no"));
}

#[test]
fn eigen_lists_all_candidates() {
    let text = ok(&["eigen", "--code", "golay", "--p", "3"]);
    assert!(text.contains("lambda det valid\n0 0 no\n1 2 yes\n2 "));
    assert!(text.contains("eigenspace lambda=1 dim=6"));
}

#[test]
fn singular_lambda_names_lambda() {
    let out = pntt(&["gen", "--code", "hamming", "--p", "2", "--lambda", "0"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("lambda=0"), "{err}");
}

#[test]
fn bad_arguments_fail_with_usage() {
    let out = pntt(&["gen", "--code", "reed-solomon"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("possible values"));

    let out = pntt(&["apply", "--code", "hamming", "--p", "2", "--vector", "0,1,2,0,0,0,0"]);
    assert!(!out.status.success());

    let out = pntt(&["apply", "--code", "hamming", "--p", "2", "--vector", "0,1"]);
    assert!(!out.status.success());

    let out = pntt(&["info", "--code", "golay", "--p", "5"]);
    assert!(!out.status.success());
}
