//! The command line end to end: golden outputs over the corpus, exit codes,
//! determinism and re-parsing of everything it writes.

use std::path::{Path, PathBuf};

use hypersemigroup::catalog;
use hypersemigroup::cli::run;
use hypersemigroup::parse_semigroup;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn file(name: &str) -> String {
    corpus().join(name).display().to_string()
}

fn hsg(args: &[&str]) -> (i32, String) {
    run(std::iter::once("hsg").chain(args.iter().copied()))
}

fn last_line(out: &str) -> &str {
    out.lines().last().unwrap_or("")
}

#[test]
fn classify_matches_golden_outputs() {
    let mut checked = 0;
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "cay") {
            let golden = path.with_extension("classify.txt");
            let expected = std::fs::read_to_string(&golden).unwrap();
            let (code, out) = hsg(&["classify", path.to_str().unwrap()]);
            assert_eq!(code, 0);
            assert_eq!(out, expected, "{}", path.display());
            checked += 1;
        }
    }
    assert_eq!(checked, 11);
}

#[test]
fn corpus_files_match_catalog() {
    for (name, s) in catalog::named_semigroups() {
        let text = std::fs::read_to_string(corpus().join(format!("{name}.cay"))).unwrap();
        assert_eq!(parse_semigroup(&text).unwrap(), s, "{name}");
        assert_eq!(parse_semigroup(&s.to_cayley()).unwrap(), s);
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let exp_z2 = dir.path().join("exp_z2.cay");
    let exp_z2 = exp_z2.to_str().unwrap();

    let (code, out) = hsg(&["exp", &file("z2.cay"), "--out", exp_z2]);
    assert_eq!((code, last_line(&out)), (0, "result: ok"));

    let cases: Vec<(Vec<String>, i32, &str)> = vec![
        (vec!["classify".into(), file("e3.cay")], 0, "ok"),
        (vec!["embed-clifford".into(), file("z2_zero.cay")], 0, "ok"),
        (
            vec!["embed-clifford".into(), file("brandt_z1_2.cay")],
            1,
            "not-clifford",
        ),
        (
            vec!["search-embed".into(), file("2chain.cay"), exp_z2.into()],
            0,
            "found",
        ),
        (
            vec!["search-embed".into(), file("brandt_z1_2.cay"), exp_z2.into()],
            1,
            "none-exhaustive",
        ),
        (
            vec![
                "search-embed".into(),
                file("e3.cay"),
                file("hol_e3.cay"),
                "--max-nodes".into(),
                "1".into(),
            ],
            3,
            "none-budget",
        ),
        (vec!["obstruct".into(), file("brandt_z1_2.cay")], 1, "obstructed"),
        (vec!["obstruct".into(), file("hol_e3.cay")], 0, "no-obstruction"),
        (vec!["classify".into(), file("missing.cay")], 2, "error"),
        (
            vec!["construct".into(), "brandt".into(), file("e3.cay"), "2".into()],
            2,
            "error",
        ),
        (vec!["frobnicate".into()], 2, "usage-error"),
    ];
    for (args, want_code, token) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out) = hsg(&args);
        assert_eq!(code, want_code, "{args:?}\n{out}");
        assert_eq!(last_line(&out), format!("result: {token}"), "{args:?}");
    }

    let null = dir.path().join("null.cay");
    std::fs::write(&null, "2\n0 0\n0 0\n").unwrap();
    let (code, out) = hsg(&["obstruct", null.to_str().unwrap()]);
    assert_eq!((code, last_line(&out)), (0, "result: not-applicable"));
}

#[test]
fn certificates_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("z2_zero.cert");
    let cert = cert.to_str().unwrap();
    let (code, _) = hsg(&["embed-clifford", &file("z2_zero.cay"), "--out", cert]);
    assert_eq!(code, 0);
    let (code, out) = hsg(&["verify-cert", cert, &file("z2_zero.cay")]);
    assert_eq!((code, last_line(&out)), (0, "result: verified"), "{out}");

    let text = std::fs::read_to_string(cert).unwrap();
    let tampered = text.replace("1 -> {2}", "1 -> {0}");
    assert_ne!(tampered, text);
    std::fs::write(cert, tampered).unwrap();
    let (code, out) = hsg(&["verify-cert", cert, &file("z2_zero.cay")]);
    assert_eq!((code, last_line(&out)), (1, "result: failed"), "{out}");
}

#[test]
fn written_tables_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| dir.path().join(name).display().to_string();
    let runs: Vec<(Vec<String>, usize)> = vec![
        (vec!["exp".into(), file("klein.cay")], 15),
        (vec!["construct".into(), "brandt".into(), file("z1.cay"), "2".into()], 5),
        (vec!["construct".into(), "zero".into(), file("z2.cay")], 3),
        (vec!["construct".into(), "holomorph".into(), file("e3.cay")], 6),
        (
            vec![
                "construct".into(),
                "product".into(),
                file("z2_zero.cay"),
                file("2chain.cay"),
            ],
            6,
        ),
        (vec!["construct".into(), "e3".into()], 3),
        (
            vec![
                "construct".into(),
                "semidirect".into(),
                file("e3.cay"),
                file("z2.cay"),
                file("e3_swap.act"),
            ],
            6,
        ),
        (
            vec!["construct".into(), "rees".into(), file("hol_e3.cay"), "{4,5}".into()],
            5,
        ),
    ];
    for (i, (mut args, size)) in runs.into_iter().enumerate() {
        let path = out(&format!("t{i}.cay"));
        args.extend(["--out".into(), path.clone()]);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, report) = hsg(&args);
        assert_eq!(code, 0, "{args:?}\n{report}");
        let table = parse_semigroup(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(table.len(), size, "{args:?}");
        assert_eq!(parse_semigroup(&table.to_cayley()).unwrap(), table);
    }
}

#[test]
fn runs_are_deterministic() {
    let commands: Vec<Vec<String>> = vec![
        vec!["classify".into(), file("hol_e3.cay")],
        vec!["exp".into(), file("z3.cay"), "--classify-elements".into()],
        vec!["embed-clifford".into(), file("klein.cay")],
        vec!["search-embed".into(), file("e3.cay"), file("hol_e3.cay")],
        vec!["obstruct".into(), file("brandt_z1_2.cay")],
        vec!["construct".into(), "holomorph".into(), file("e3.cay")],
    ];
    for args in commands {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(hsg(&args), hsg(&args), "{args:?}");
    }
}
