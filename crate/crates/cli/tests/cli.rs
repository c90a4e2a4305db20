use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn qcoset(args: &[&str]) -> Output {
    qcoset_stdin(args, "")
}

fn qcoset_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qcoset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const IDENTITY: &str = "0 1 0 / 0 1 0\n1\n";
const ZETA: &str = "1 1 1 / 1 1 1 @ 0 0\n0 0 1\n0 1 0\n1 0 0\n";

#[test]
fn chi_of_identity_and_zeta() {
    let o = qcoset_stdin(&["coset", "chi"], IDENTITY);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "alpha (0,1)\nbeta (0,1)\neta 0\nchi 1 1\n1 1\n");
    let o = qcoset_stdin(&["coset", "chi", "-"], ZETA);
    assert_eq!(stdout(&o), "alpha (0,1)\nbeta (0,1)\neta 1\nchi 1 1\n1 1\n");
}

#[test]
fn json_feeds_canon_and_star() {
    let dir = TempDir::new().unwrap();
    let zeta = write(&dir, "z.w", ZETA);
    let o = qcoset(&["--output", "json", "coset", "chi", &zeta]);
    assert!(o.status.success());
    let json = write(&dir, "z.json", &stdout(&o));
    let canon = qcoset(&["coset", "canon", &json]);
    assert!(canon.status.success());
    assert!(stdout(&canon).starts_with("kappa\n"));
    for path in ["matrix", "invariant", "both"] {
        let o = qcoset(&["--path", path, "coset", "star", &json, &zeta]);
        assert!(o.status.success(), "{path}");
        assert_eq!(stdout(&o), "alpha (0,1)\nbeta (0,1)\neta 2\nchi 1 1\n1 1\n");
    }
    let o = qcoset(&["--output", "json", "coset", "star", &json, &json]);
    let again = write(&dir, "z2.json", &stdout(&o));
    assert_eq!(stdout(&qcoset(&["coset", "weight", &again])), "-2\n");
}

#[test]
fn diagram_of_zeta() {
    let o = qcoset_stdin(&["coset", "diagram"], ZETA);
    assert_eq!(stdout(&o), "○\n│ ⊘\n○\n");
}

#[test]
fn rel_commands() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a", "1 1\n1 0\n");
    let b = write(&dir, "b", "1 1\n1 1\n");
    let o = qcoset(&["rel", "compose", &a, &b]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 1\n1 0\n");
    assert_eq!(stdout(&qcoset(&["rel", "inv", &a])), "1 1\n0 1\n");
    let inv = stdout(&qcoset(&["rel", "invariants", &a]));
    assert!(inv.contains("ker 1\n") && inv.ends_with("rank 0\n"));
    let c = write(&dir, "c", "2 1\n1 0 1\n");
    assert_eq!(qcoset(&["rel", "compose", &c, &a]).status.code(), Some(3));
}

#[test]
fn transfer() {
    let g = "1 1\n0 1\n1 1\n";
    assert_eq!(
        stdout(&qcoset_stdin(
            &["colligation", "transfer", "--lambda", "0"],
            g
        )),
        "0\n"
    );
    let o = qcoset_stdin(&["colligation", "transfer", "--sweep"], g);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "lambda 0\n0\nlambda 1\nsingular\n");
    assert_eq!(
        qcoset_stdin(&["colligation", "transfer", "--lambda", "1"], g)
            .status
            .code(),
        Some(3)
    );
    let id = "1 1\n1 0\n0 1\n";
    assert_eq!(
        stdout(&qcoset_stdin(
            &["--p", "3", "colligation", "transfer", "--lambda", "2"],
            id
        )),
        "1\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        qcoset_stdin(&["coset", "chi"], "0 1 0 / 0 1 0\n0\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qcoset_stdin(&["coset", "chi"], "garbage").status.code(),
        Some(2)
    );
    assert_eq!(
        qcoset(&["coset", "chi", "/no/such/file"]).status.code(),
        Some(2)
    );
    assert_eq!(qcoset(&["--p", "4", "field"]).status.code(), Some(2));
    assert_eq!(qcoset(&["--bogus", "field"]).status.code(), Some(2));
    assert_eq!(
        qcoset(&["verify", "completeness", "--sizes", "2,1,2,2,1,2"])
            .status
            .code(),
        Some(3)
    );
    let o = qcoset(&["verify"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "no checks selected\n");
}

#[test]
fn mismatched_star_is_a_domain_error() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a", IDENTITY);
    let b = write(&dir, "b", "0 2 0 / 0 2 0\n1 0\n0 1\n");
    assert_eq!(qcoset(&["coset", "star", &a, &b]).status.code(), Some(3));
}

#[test]
fn verify_completeness_counts_six_orbits() {
    let o = qcoset(&[
        "verify",
        "completeness",
        "--q",
        "2",
        "--sizes",
        "1,1,1,1,1,1",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("  orbits 6\n"));
}

#[test]
fn verify_all_passes_and_is_reproducible() {
    let args = ["verify", "all", "--q", "2", "--seed", "7", "--trials", "50"];
    let a = qcoset(&args);
    assert!(a.status.success(), "{}", stdout(&a));
    assert!(!stdout(&a).contains("FAIL"));
    assert_eq!(a.stdout, qcoset(&args).stdout);
    let json = [
        "--output", "json", "verify", "iso", "--q", "3", "--seed", "5", "--trials", "30",
    ];
    assert_eq!(qcoset(&json).stdout, qcoset(&json).stdout);
}

#[test]
fn enum_lists_every_morphism() {
    let o = qcoset(&[
        "--output",
        "json",
        "coset",
        "enum",
        "--alpha",
        "0,0",
        "--beta",
        "0,0",
        "--eta-max",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}
