use std::process::{Command, Output};

use bsl_core::group::{is_trivial, parse_word, WordMode};
use bsl_core::lattice::GroupCtx;
use bsl_core::madic::{MarkedGroupSpec, XiSpec};
use serde_json::Value;

fn bsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsl")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bsl(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["wp", "--m", "2", "--xi", "int:3", "--word", "babbABaBBA"]), "trivial");
    assert_eq!(stdout(&["rdigits", "--m", "2", "--xi", "int:3", "--count", "5"]), "1 1 1 1 1");
    assert_eq!(stdout(&["bounds", "--m", "2", "--xi", "int:1", "--xi2", "int:3"]), "h=1 lower=e^-22 upper=e^-3");
}

#[test]
fn json_shapes() {
    assert_eq!(json(&["wp", "--m", "2", "--xi", "int:3", "--word", "abA"]), serde_json::json!({"trivial": false}));
    let v = json(&["dist", "--m", "2", "--xi", "int:3", "--xi2", "int:3", "--max-len", "6"]);
    assert_eq!(v["nu"], Value::Null);
    assert_eq!(v["word"], Value::Null);
    let v = json(&["wreath", "--m", "2", "--xi", "int:3", "--word", "abA"]);
    assert_eq!(v, serde_json::json!({"poly": {"offset": 1, "coeffs": [1]}, "shift": 0}));
    let v = json(&["bounds", "--m", "2", "--xi", "int:1", "--xi2", "int:5"]);
    assert_eq!(v, serde_json::json!({"h": 2, "lower_exp": 28, "upper_exp": 5}));
}

#[test]
fn big_alpha_is_exact() {
    // 6^40 = 2^40 3^40: dividing by 6 and multiplying by 2 forty times leaves 2^40
    let v = json(&["nk", "--m", "2", "--n", "6", "--k", "40"]);
    assert_eq!(v["N"], 40);
    assert_eq!(v["alpha"].to_string(), (1u128 << 40).to_string());
}

#[test]
fn conjugacy_witness_round_trips() {
    let ctx = GroupCtx::new(MarkedGroupSpec::new(2, XiSpec::int(3)).unwrap());
    for (v, w) in [("ab", "ba"), ("aabA", "abAa"), ("abAB", "BabA")] {
        let line = stdout(&["conj", "--m", "2", "--xi", "int:3", "--word", v, "--word2", w]);
        let g = line.strip_prefix("conjugate via ").expect("conjugate");
        let g = parse_word(g, WordMode::Extended).unwrap();
        let (v, w) = (parse_word(v, WordMode::Compact).unwrap(), parse_word(w, WordMode::Compact).unwrap());
        let check = g.concat(&w).concat(&g.inverse()).concat(&v.inverse());
        assert!(is_trivial(&ctx, &check).unwrap());
    }
    assert_eq!(stdout(&["conj", "--m", "2", "--xi", "int:3", "--word", "a", "--word2", "b"]), "not conjugate");
}

#[test]
fn forms_round_trip() {
    let ctx = GroupCtx::new(MarkedGroupSpec::new(2, XiSpec::int(3)).unwrap());
    for word in ["abbAbaBA", "aA", "BBabAAb"] {
        let orig = parse_word(word, WordMode::Compact).unwrap();
        for cmd in ["nf", "reduce"] {
            let text = stdout(&[cmd, "--m", "2", "--xi", "int:3", "--word", word]);
            let back = parse_word(&text, WordMode::Extended).unwrap();
            assert!(is_trivial(&ctx, &back.concat(&orig.inverse())).unwrap(), "{cmd} {word} -> {text}");
        }
    }
}

#[test]
fn other_commands() {
    assert_eq!(stdout(&["iso", "--m", "2", "--xi", "int:3", "--m2", "-2", "--xi2", "int:-3"]), "isomorphic");
    assert_eq!(stdout(&["recover", "--m", "2", "--xi", "int:1", "--count", "3"]), "m=2 digits=1 0 0");
    assert_eq!(stdout(&["relator", "--kind", "v", "--k", "4"]), "abbbbAbaBBBBAB");
    assert_eq!(stdout(&["relator", "--kind", "b", "--m", "2", "--xi", "int:3", "--index", "1"]), "babbABaBBA");
    assert_eq!(stdout(&["aut", "--m", "2", "--xi", "int:3", "--aut", "j", "--word", "ab"]), "aB");
    assert_eq!(stdout(&["aut", "--m", "2", "--xi", "int:3", "--aut", "phi", "--e", "e0", "--word", "a"]), "ab");
    let theta = stdout(&["aut", "--m", "2", "--xi", "int:3", "--aut", "theta", "--k", "3", "--word", "e0", "--alphabet", "extended"]);
    assert_eq!(theta, "e0^3");
    assert_eq!(stdout(&["bswp", "--p", "2", "--q", "3", "--word", "ab^2Ab^-3"]), "trivial");
    assert_eq!(stdout(&["nk", "--m", "2", "--n", "4", "--k", "2"]), "N=3 alpha=2");
    assert_eq!(stdout(&["hom", "--m", "2", "--xi", "int:1", "--xi2", "int:3", "--depth", "3"]), "fail at i = 3 (truncated check)");
    let line = stdout(&["hom", "--m", "2", "--xi", "int:3", "--m2", "1", "--xi2", "int:0"]);
    assert!(line.starts_with("pass") && line.contains("truncated"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| bsl(args).status.code();
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["wp", "--m", "2", "--word", "ab"]), Some(2));
    assert_eq!(code(&["wp", "--m", "2", "--xi", "int:3", "--word", "abc"]), Some(2));
    assert_eq!(code(&["dist", "--m", "2", "--xi", "int:1", "--xi2", "int:3", "--max-len", "20"]), Some(2));
    assert_eq!(code(&["bounds", "--m", "2", "--xi", "int:3", "--xi2", "int:3"]), Some(1));
    assert_eq!(code(&["rdigits", "--m", "4", "--xi", "rat:1/2"]), Some(1));
    let out = bsl(&["rdigits", "--m", "2", "--xi", "rseq:1,1", "--count", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error[digit-budget]") && err.contains("digit 3"), "{err}");
}

#[test]
fn malformed_input_never_panics() {
    let cases: &[&[&str]] = &[
        &["wp", "--m", "0", "--xi", "int:1", "--word", "a"],
        &["wp", "--m", "2", "--xi", "rat:1/0", "--word", "a"],
        &["wp", "--m", "2", "--xi", "rseq:;", "--word", "a"],
        &["nf", "--m", "2", "--xi", "int:3", "--alphabet", "extended", "--word", "e^2"],
        &["aut", "--m", "2", "--xi", "int:3", "--aut", "theta", "--k", "2", "--word", "b"],
        &["nk", "--m", "4", "--n", "2", "--k", "1"],
        &["bswp", "--p", "0", "--q", "3", "--word", "a"],
        &["relator", "--kind", "w", "--m", "2", "--t", "1,x"],
        &["hom", "--m", "2", "--xi", "int:3", "--xi2", "int:3", "--depth", "0"],
    ];
    for args in cases {
        let out = bsl(args);
        let code = out.status.code();
        assert!(matches!(code, Some(1) | Some(2)), "{args:?} -> {code:?}");
        assert!(!String::from_utf8_lossy(&out.stderr).contains("panicked"), "{args:?}");
    }
}

#[test]
fn dist_is_deterministic() {
    let args = ["dist", "--m", "2", "--xi", "int:3", "--m2", "3", "--xi2", "int:1", "--max-len", "10"];
    let first = stdout(&args);
    assert_eq!(first, "nu=10 word=abbAbaBBAB");
    for _ in 0..3 {
        assert_eq!(stdout(&args), first);
    }
}
