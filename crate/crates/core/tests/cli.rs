mod common;

use std::path::PathBuf;
use std::process::Command;

use wsbound::bound_engine::evaluate_path;
use wsbound::certificate::Certificate;
use wsbound::cli::{run, Outcome};
use wsbound::DivisorIndex;

fn model_path(file: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models").join(file);
    root.to_str().unwrap().to_string()
}

fn wsbound(args: &[&str]) -> Outcome {
    run(std::iter::once("wsbound").chain(args.iter().copied()))
}

#[test]
fn semigroup_prints_bound_and_set() {
    let out = wsbound(&["semigroup", "--gens", "3,5,7", "--q", "8", "--bound", "gm", "--show-set"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("bound 25 (Geil-Matsumoto, q = 8)"));
    assert!(out.stdout.contains("{0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 25, 26, 28} (24 elements)"));
    let lw = wsbound(&["semigroup", "--gens", "3,5,7", "--q", "8", "--bound", "lewittes"]);
    assert!(lw.stdout.contains("bound 25 (Lewittes"));
    let t = wsbound(&["semigroup", "--gens", "4,5", "--q", "8", "--bound", "gm-t"]);
    assert!(t.stdout.contains("bound 26 (unit-place single-point bound"));
}

#[test]
fn small_subcommands() {
    let ap = wsbound(&["apery", "--gens", "3,5,7", "--base", "8"]);
    assert_eq!(ap.stdout, "Ap(<3, 5, 7>, 8) = (0, 9, 10, 3, 12, 5, 6, 7)\n");
    let hw = wsbound(&["hasse-weil", "--genus", "3", "--q", "8"]);
    assert_eq!(hw.stdout, "bound 25 (Hasse-Weil, g = 3, q = 8)\n");
    let bad = wsbound(&["apery", "--gens", "3,5,7", "--base", "4"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("not an element"));
}

#[test]
fn multipoint_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("klein.cert");
    let cert_s = cert.to_str().unwrap();
    let out = wsbound(&["multipoint", "--model", &model_path("klein_quartic.model"), "--emit-certificate", cert_s]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("bound 24 (multi-point path bound"));
    assert_eq!(wsbound(&["verify-cert", cert_s]).code, 0);

    let mut value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let d = &mut value["edges"][3]["delta"];
    *d = serde_json::json!(1 - d.as_u64().unwrap());
    std::fs::write(&cert, serde_json::to_string(&value).unwrap()).unwrap();
    let out = wsbound(&["verify-cert", cert_s]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("mismatch at edge 3"), "{}", out.stderr);
}

#[test]
fn explicit_path_certificate_verifies() {
    let k = common::klein();
    let mut path: Vec<DivisorIndex> = (-1..=23).map(|a| DivisorIndex::new(vec![a, 0])).collect();
    for v in [[24, 0], [24, 1], [24, 2], [25, 2], [25, 3], [25, 4]] {
        path.push(DivisorIndex::new(v.to_vec()));
    }
    let cert = Certificate::Multipoint(evaluate_path(&k, &path).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("explicit.cert");
    std::fs::write(&file, cert.to_json()).unwrap();
    let out = wsbound(&["verify-cert", file.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("weight 22, bound 24"));
}

#[test]
fn tbound_genus6() {
    let out = wsbound(&["tbound", "--model", &model_path("genus6_newton.model"), "--place", "P2", "--excluded", "5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("q_bound 26 (unit-place path bound)"));
    assert!(out.stdout.contains("total 31"));
    let missing = wsbound(&["tbound", "--model", &model_path("genus6_newton.model")]);
    assert_eq!(missing.code, 1);
    assert!(missing.stderr.contains("--excluded"));
}

#[test]
fn unit_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("t.cert");
    let cert_s = cert.to_str().unwrap();
    let out = wsbound(&[
        "tbound", "--model", &model_path("klein_quartic.model"), "--excluded", "3", "--emit-certificate", cert_s,
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let verified = wsbound(&["verify-cert", cert_s]);
    assert_eq!(verified.code, 0, "{}", verified.stderr);
    assert!(verified.stdout.contains("bound 24"));
}

#[test]
fn output_is_deterministic() {
    let args = ["multipoint", "--model", &model_path("genus6_newton.model")];
    let a = wsbound(&args);
    let b = wsbound(&args);
    assert_eq!(a, b);
    assert!(a.stdout.contains("bound 31"));
}

#[test]
fn check_reports_invariants() {
    let ok = wsbound(&["check", "--model", &model_path("klein_quartic.model")]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.contains("place P1: H = <3, 5, 7>"));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.model");
    std::fs::write(
        &file,
        "q: 5\ngenus: 0\nfunctions: [x]\nplaces:\n  - {name: A, valuations: [1], distinguished: true}\nexponent_lower_bounds: [null]\n",
    )
    .unwrap();
    let bad = wsbound(&["check", "--model", file.to_str().unwrap()]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("invariant pointedness failed"), "{}", bad.stderr);
    let unparsable = wsbound(&["check", "--model", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(unparsable.code, 1);
}

#[test]
fn caps_exit_with_two() {
    let out = wsbound(&["semigroup", "--gens", "5000000,5000001", "--q", "8"]);
    assert_eq!(out.code, 2, "{}", out.stderr);
}

#[test]
fn binary_selfcheck() {
    let out = Command::new(env!("CARGO_BIN_EXE_wsbound")).arg("selfcheck").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("selfcheck passed\n"));
}
