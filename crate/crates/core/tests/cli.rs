use std::path::PathBuf;
use std::process::Command;

use motivic::json::{self, Json};
use motivic::motive::MotiveFrac;
use motivic::series::RationalSeries;
use motivic::spectra::SpectrumPoly;
use motivic::UElement;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_motivic"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("motivic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn brieskorn_spectrum() {
    let (code, out) = run(&["spectrum", "--geometry", "brieskorn(2,3)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!([["5/6", 1], ["7/6", 1]]));
    let s: SpectrumPoly = json::parse(&out).unwrap();
    assert_eq!(json::render(&s.to_json()), out.trim_end());
}

#[test]
fn zeta_of_x_squared() {
    let g = scratch("x2.json", r#"{"f_exponents": [2]}"#);
    let (code, out) = run(&["zeta", "--geometry", g.to_str().unwrap(), "--character", "1/2"]);
    assert_eq!(code, 0, "{out}");
    let s: RationalSeries<MotiveFrac> = json::parse(&out).unwrap();
    // (L-1) L^-2 T^2 / (1 - L^-1 T^2)
    for n in 0..6i64 {
        let want = &MotiveFrac::from(motivic::MotiveClass::lefschetz_minus_one()) * &MotiveFrac::lefschetz_pow(-2 - n);
        assert_eq!(s.exp_t_coefficient(2 + 2 * n), want);
        assert!(s.exp_t_coefficient(3 + 2 * n).is_zero());
    }
}

#[test]
fn thom_sebastiani_check() {
    let x2 = scratch("ts-x2.json", r#"{"f_exponents": [2]}"#);
    let y3 = scratch("ts-y3.json", r#"{"f_exponents": [3]}"#);
    let (code, out) =
        run(&["thom-sebastiani", "--left", x2.to_str().unwrap(), "--right", y3.to_str().unwrap(), "--check", "--imax", "30"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 30);
}

#[test]
fn outputs_are_deterministic_and_reparse() {
    let g = r#"{"f_exponents": [2, 3], "g_exponents": [1, 0], "w_indices": [1, 2]}"#;
    let a = run(&["exp-series", "--geometry", g]);
    let b = run(&["exp-series", "--geometry", g]);
    assert_eq!(a, b);
    let s: RationalSeries<UElement> = json::parse(&a.1).unwrap();
    assert_eq!(json::render(&s.to_json()), a.1.trim_end());
    let (_, sg) = run(&["sg", "--geometry", "brieskorn(2,4)"]);
    let u: UElement = json::parse(&sg).unwrap();
    assert_eq!(json::render(&u.to_json()), sg.trim_end());
}

#[test]
fn window_and_display() {
    let (code, out) =
        run(&["measure", "--geometry", r#"{"f_exponents": [1]}"#, "--window", "1:3", "--display", "lefschetz"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let texts: Vec<&str> = v["expansion"].as_array().unwrap().iter().map(|e| e["text"].as_str().unwrap()).collect();
    assert_eq!(texts, ["L^-2", "L^-3", "L^-4"]);
    assert_eq!(run(&["measure", "--geometry", r#"{"f_exponents": [1]}"#, "--window", "3:1"]).0, 2);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("motivic-out-{}.json", std::process::id()));
    let (code, out) = run(&["spectrum", "--geometry", "brieskorn(2,2,2)", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let s: SpectrumPoly = json::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(s, SpectrumPoly::monomial(num_rational::Rational64::new(3, 2), 1));
}

#[test]
fn oracles() {
    let (code, out) = run(&["oracle", "padic", "--poly", "x^2+y^3", "--prime", "5", "--level", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    let (code, out) = run(&["oracle", "gauss", "--prime", "11"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"pass\": true"));
    assert_eq!(run(&["oracle", "gauss", "--prime", "2"]).0, 2);
}

#[test]
fn errors_are_json_with_exit_two() {
    for args in [
        vec!["zeta", "--geometry", "/nonexistent/g.json"],
        vec!["zeta", "--geometry", "{\"f_exponents\": [2]}", "--character", "1/0"],
        vec!["exp-series", "--geometry", "brieskorn(2,3)"],
        vec!["spectrum", "--geometry", "brieskorn(1)"],
        vec!["oracle", "padic", "--poly", "x^", "--prime", "3", "--level", "0"],
        vec!["no-such-command"],
    ] {
        let (code, out) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"].is_string(), "{args:?}: {out}");
    }
}

#[test]
fn thread_count_env() {
    let out = bin().args(["spectrum", "--geometry", "brieskorn(2,3)"]).env("MOTIVIC_THREADS", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin().args(["spectrum", "--geometry", "brieskorn(2,3)"]).env("MOTIVIC_THREADS", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["oracle", "--help"]).0, 0);
}
