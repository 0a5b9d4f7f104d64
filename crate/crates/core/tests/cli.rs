mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::*;
use mackey::cli::{parse_document, render_machine, run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use mackey::mackey::{burnside, constant_z, permutation, twisted_burnside, GSet};
use mackey::{box_product, Int};

fn mackey(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["mackey"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mackey"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn every_constructor_round_trips() {
    for q in [2, 3, 5, 7] {
        for (name, m) in constructor_outputs::<Int>(prime(q)) {
            let text = render_machine(&m);
            let back = parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}")).to_functor();
            assert_eq!(back, m, "{name} at p={q}");
            assert_eq!(render_machine(&back), text);
        }
    }
}

#[test]
fn random_functors_round_trip() {
    let mut r = rng(3);
    for _ in 0..40 {
        let m = random_functor::<Int>(&mut r, prime(3));
        assert_eq!(parse_document(&render_machine(&m)).unwrap().to_functor(), m);
    }
}

#[test]
fn fixture_exit_codes() {
    for (file, code, needle) in [
        ("burnside_3.txt", EXIT_OK, "pass"),
        ("regular_2.txt", EXIT_OK, "pass"),
        ("torsion_top_2.txt", EXIT_OK, "pass"),
        ("transfer_one_2.txt", EXIT_FAILURE, "fail"),
        ("missing_tr.txt", EXIT_USAGE, "error[missing-field]"),
        ("res_dimension.txt", EXIT_USAGE, "error[dimension]"),
        ("not_prime.txt", EXIT_USAGE, "error[not-prime]"),
        ("ill_defined_tr.txt", EXIT_USAGE, "error[ill-defined]"),
        ("unbalanced.txt", EXIT_USAGE, "error[syntax]"),
    ] {
        let (got, out, err) = mackey(&["check", &fixture(file)], "");
        assert_eq!(got, code, "{file}: {out}{err}");
        assert!(out.contains(needle) || err.contains(needle), "{file}: {out}{err}");
    }
}

#[test]
fn error_messages_name_the_file() {
    let (code, _, err) = mackey(&["check", &fixture("missing_tr.txt")], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with(&fixture("missing_tr.txt")), "{err}");
    let (code, _, err) = mackey(&["check", "/nonexistent/file.txt"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error[io]"), "{err}");
}

#[test]
fn document_errors() {
    let base = render_machine(&burnside::<Int>(prime(2)));
    let cases = [
        (base.replace("p: 2", "p: 2\np: 2"), "error[duplicate-field]"),
        (base.replace("action:", "colour: 3\naction:"), "error[unknown-field]"),
        (base.replace("res: [[1, 2]]", "res: [[1, 2], [3]]"), "error[dimension]"),
        (base.replace("res: [[1, 2]]", "res: [[1, 2, 3]]"), "error[dimension]"),
        (base.replace("res: [[1, 2]]", "res: [[1, 2]"), "error[syntax]"),
        (base.replace("p: 2", "p: two"), "error[syntax]"),
    ];
    for (text, code) in cases {
        let (got, _, err) = mackey(&["check"], &text);
        assert_eq!(got, EXIT_USAGE, "{text}");
        assert!(err.starts_with(code), "{err} for {text}");
        assert!(!err.contains("2x2"), "{err}");
    }
    let plus = base.replace("res: [[1, 2]]", "res: [[+1, 2]]");
    assert_eq!(mackey(&["check"], &plus).0, EXIT_OK);
}

#[test]
fn stdin_is_read_once() {
    let a = render_machine(&burnside::<Int>(prime(2)));
    let (code, _, err) = mackey(&["box", "-", "-"], &a);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("only be read once"), "{err}");
    let file = temp_file("a.txt", &a);
    assert_eq!(mackey(&["box", &file, "-"], &a).0, EXIT_OK);
}

#[test]
fn box_twice_matches_library() {
    let p = prime(3);
    let m = permutation::<Int>(p, GSet::new(1, 1));
    let n = twisted_burnside::<Int>(p, Int::from(2));
    let (fm, fn_) = (temp_file("m.txt", &render_machine(&m)), temp_file("n.txt", &render_machine(&n)));
    let (code, once, _) = mackey(&["box", &fm, &fn_], "");
    assert_eq!(code, EXIT_OK);
    let (code, twice, _) = mackey(&["box", "-", &fm], &once);
    assert_eq!(code, EXIT_OK);
    let cli = parse_document(&twice).unwrap().to_functor();
    let lib = box_product(&box_product(&m, &n).unwrap(), &m).unwrap();
    assert_eq!(cli.tier_invariants(), lib.tier_invariants());
    assert!(cli.check_axioms().passed());

    let (code, raw, _) = mackey(&["box", "--raw", &fm, &fn_], "");
    assert_eq!(code, EXIT_OK);
    let raw = parse_document(&raw).unwrap().to_functor();
    assert_eq!(raw, box_product(&m, &n).unwrap());
}

#[test]
fn box_prime_mismatch_is_an_input_error() {
    let a = temp_file("a2.txt", &render_machine(&burnside::<Int>(prime(2))));
    let b = temp_file("b3.txt", &render_machine(&burnside::<Int>(prime(3))));
    let (code, _, err) = mackey(&["box", &a, &b], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error[prime-mismatch]"), "{err}");
}

#[test]
fn text_render_of_constant_functor() {
    let (code, out, _) = mackey(&["--format", "text", "make", "constant", "--p", "2"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("C_2 Mackey functor\n"), "{out}");
    assert!(out.contains("M(C_p/C_p)   Z\n"));
    assert!(out.contains("M(C_p/e)     Z    (trivial action)"));
    assert!(out.contains("res: [[1]]\ntr: [[2]]\ngamma: [[1]]"));
}

#[test]
fn make_outputs_parse() {
    for args in [
        vec!["make", "burnside", "--p", "5"],
        vec!["make", "constant", "--p", "3"],
        vec!["make", "permutation", "--p", "3", "--fixed", "1", "--free", "2"],
        vec!["make", "twisted", "--p", "7", "--twist", "-3"],
    ] {
        let (code, out, err) = mackey(&args, "");
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        assert!(parse_document(&out).unwrap().to_functor().check_axioms().passed());
    }
    assert_eq!(mackey(&["make", "twisted", "--p", "7"], "").0, EXIT_USAGE);
    assert_eq!(mackey(&["make", "burnside", "--p", "6"], "").0, EXIT_USAGE);
    assert_eq!(mackey(&["frobnicate"], "").0, EXIT_USAGE);
}

#[test]
fn classify_and_invert() {
    let twisted = render_machine(&twisted_burnside::<Int>(prime(5), Int::from(2)));
    let (code, out, _) = mackey(&["classify"], &twisted);
    assert_eq!((code, out.as_str()), (EXIT_OK, "TwistedBurnside(2)\n"));
    let (code, out, _) = mackey(&["--format", "text", "classify"], &twisted);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sign ambiguous: yes") && out.contains("rank of Gamma top (k): 1"), "{out}");

    let constant = render_machine(&constant_z::<Int>(prime(3)));
    let (code, out, _) = mackey(&["classify"], &constant);
    assert_eq!((code, out.as_str()), (EXIT_FAILURE, "NotInvertible(TopNotRank2)\n"));
    let (code, _, err) = mackey(&["invert"], &constant);
    assert_eq!(code, EXIT_FAILURE);
    assert_eq!(err, "not invertible: NotInvertible(TopNotRank2)\n");

    let zero_twist = render_machine(&twisted_burnside::<Int>(prime(3), Int::from(3)));
    assert_eq!(mackey(&["classify"], &zero_twist).1, "NotInvertible(TwistNotCoprime(0))\n");
}

#[test]
fn iso_outcomes() {
    let p = prime(5);
    let file = |name: &str, d: i64| temp_file(name, &render_machine(&twisted_burnside::<Int>(p, Int::from(d))));
    let (a, b, c) = (file("t1.txt", 1), file("t4.txt", 4), file("t2.txt", 2));
    let (code, out, _) = mackey(&["iso", &a, &b], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("Found\ntop: "), "{out}");
    let (code, out, _) = mackey(&["iso", &a, &c], "");
    assert_eq!((code, out.as_str()), (EXIT_FAILURE, "NotIsomorphic(TwistMismatch)\n"));
    let constant = temp_file("c5.txt", &render_machine(&constant_z::<Int>(p)));
    assert_eq!(mackey(&["iso", &a, &constant], "").1, "NotIsomorphic(InvariantMismatch)\n");
    let other = temp_file("b3.txt", &render_machine(&burnside::<Int>(prime(3))));
    assert_eq!(mackey(&["iso", &a, &other], "").1, "NotIsomorphic(PrimeMismatch)\n");
}

#[test]
fn gamma_and_phi_commands() {
    let a = render_machine(&burnside::<Int>(prime(3)));
    let (code, out, _) = mackey(&["gamma"], &a);
    assert_eq!(code, EXIT_OK);
    let gamma = parse_document(&out).unwrap().to_functor();
    assert!(gamma.top().invariant_factors().is_free_of_rank(1));
    let (code, out, _) = mackey(&["phi"], &a);
    assert_eq!(code, EXIT_OK);
    let phi = parse_document(&out).unwrap().to_functor();
    assert!(phi.top().invariant_factors().is_free_of_rank(1) && phi.bottom().is_trivial());
}

#[test]
fn binary_pipeline() {
    let (code, made, _) = binary(&["make", "twisted", "--p", "5", "--twist", "2"], "");
    assert_eq!(code, 0);
    let (code, inverse, err) = binary(&["invert"], &made);
    assert_eq!(code, 0, "{err}");
    assert_eq!(parse_document(&inverse).unwrap().res[(0, 0)], Int::from(3));
    let (code, out, _) = binary(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("classify"));
}
