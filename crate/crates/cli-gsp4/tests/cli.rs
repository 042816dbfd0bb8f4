use std::process::Command;

use cli_gsp4::example::{eigencharacter_table, h_filtration, render_eigencharacter_table};
use cli_gsp4::oracle::saturation_order;
use cli_gsp4::{run, saturation_oracle, verify_h_pattern, CliError, Config, ExamplePlan, Params, Report, Status, Verb};
use galois_rings::{GaloisRing, Mat};
use root_data::{Root, RootDatum};
use symplectic_core::exp_nilpotent;

fn config_error(text: &str) -> (String, Option<usize>) {
    match Config::parse(text, Some(Verb::Lift)) {
        Err(CliError::Config { field, line, .. }) => (field, line),
        other => panic!("expected a config error, got {other:?}"),
    }
}

#[test]
fn unknown_field_is_located() {
    let (field, line) = config_error("format_version = 1\n[params]\np = 23\nprimes = 5\n");
    assert_eq!(field, "primes");
    assert_eq!(line, Some(4));
}

#[test]
fn bad_format_version_is_located() {
    let (field, line) = config_error("\nformat_version = 7\n");
    assert_eq!((field.as_str(), line), ("format_version", Some(2)));
}

#[test]
fn ill_typed_value_is_located() {
    let (_, line) = config_error("format_version = 1\n[params]\np = \"five\"\n");
    assert_eq!(line, Some(3));
}

#[test]
fn composite_prime_is_a_field_error() {
    let cfg = Config::parse("format_version = 1\n[params]\n\np = 21\n", Some(Verb::Lift)).unwrap();
    match run(&cfg) {
        Err(CliError::Config { field, line, .. }) => assert_eq!((field.as_str(), line), ("p", Some(4))),
        other => panic!("{other:?}"),
    }
}

#[test]
fn verb_mismatch_is_rejected() {
    let (field, _) = config_error("format_version = 1\nverb = \"oracle\"\n");
    assert_eq!(field, "verb");
}

#[test]
fn example_rejects_small_primes() {
    for p in [13, 19] {
        assert!(matches!(ExamplePlan::new(p, 3), Err(CliError::PlanInvalid(_))));
    }
    let mut plan = ExamplePlan::new(23, 3).unwrap();
    plan.kappa_k = 5;
    assert!(matches!(plan.validate(), Err(CliError::PlanInvalid(_))));
    assert!(ExamplePlan::new(29, 3).is_ok());
}

#[test]
fn h_pattern_examples() {
    let r = GaloisRing::zp(23, 4).unwrap();
    let p = r.from_int(23);
    assert!(verify_h_pattern(&Mat::diagonal(&r, &[r.from_int(2), r.one(), r.from_int(5), r.from_int(7)])));
    let mut upper = Mat::identity(&r, 4);
    upper.set(0, 1, p);
    assert!(verify_h_pattern(&upper));
    let mut lower = Mat::identity(&r, 4);
    lower.set(1, 0, r.one());
    assert!(!verify_h_pattern(&lower));
}

#[test]
fn saturation_needs_large_prime() {
    assert!(matches!(saturation_oracle(3, 10, 0), Err(CliError::PrimeTooSmall { p: 3, bound: 4 })));
    assert!(saturation_oracle(5, 20, 1).unwrap());
}

#[test]
fn perturbed_generators_saturate() {
    let f = GaloisRing::zp(5, 1).unwrap();
    let d = RootDatum::new(2);
    let u = exp_nilpotent(&d.root_vector(&f, &Root::long(2, 1))).unwrap().into_mat();
    assert_eq!(saturation_order(5, 1, &u, 1, &Mat::identity(&f, 4)).unwrap(), 625);
}

#[test]
fn eigencharacter_display() {
    assert_eq!(
        render_eigencharacter_table(&eigencharacter_table(&[3, 0, 6, 9])),
        "σ_{±2L₁} = χ̄^{∓3}, σ_{±2L₂} = χ̄^{∓9}, σ_{±(L₁+L₂)} = χ̄^{∓6} and σ_{±(L₁−L₂)} = χ̄^{±3}"
    );
}

#[test]
fn h_filtration_dimensions() {
    let d = RootDatum::new(2);
    let dims: Vec<usize> = (1..=3).map(|m| h_filtration(&d, m).len()).collect();
    assert_eq!(dims, vec![6, 8, 10]);
}

#[test]
fn report_roundtrip() {
    let cfg = Config::new(Verb::CheckHypotheses, Params { p: Some(29), ..Params::default() });
    let r = run(&cfg).unwrap();
    let text = r.to_toml().unwrap();
    assert!(text.contains("format_version = 1"));
    let back = Report::from_toml(&text).unwrap();
    assert_eq!(back, r);
    assert!(r.checks.iter().any(|c| c.status == Status::Assumed));
}

#[test]
fn lift_reaches_target_for_generic_exponents() {
    let cfg = Config::new(
        Verb::Lift,
        Params { p: Some(23), precision: Some(3), exponents: Some(vec![2, 0, -7, -5]), ..Params::default() },
    );
    let r = run(&cfg).unwrap();
    assert!(r.passed(), "{}", r.summary());
    assert_eq!(r.ladder.last().unwrap().precision, 3);
}

fn gspdef(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gspdef")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_exit_codes() {
    let path = std::env::temp_dir().join(format!("gspdef-generic-{}.toml", std::process::id()));
    std::fs::write(&path, "format_version = 1\nverb = \"check-hypotheses\"\n[params]\nexponents = [2, 0, -7, -5]\n").unwrap();
    let (code, stdout) = gspdef(&["check-hypotheses", "--config", path.to_str().unwrap(), "--p", "23"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert!(Report::from_toml(&stdout).unwrap().passed());
    assert_eq!(gspdef(&["check-hypotheses", "--p", "13"]).0, 1);
    assert_eq!(gspdef(&["oracle", "--p", "3"]).0, 2);
    assert_eq!(gspdef(&["lift", "--p", "15"]).0, 2);
    assert_eq!(gspdef(&["lift", "--config", "/nonexistent/config.toml"]).0, 2);
}

#[test]
fn sample_configs_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    assert_eq!(Config::load(&dir.join("lift.toml"), None).unwrap().verb, Verb::Lift);
    assert_eq!(Config::load(&dir.join("local-tame.toml"), None).unwrap().verb, Verb::LocalTame);
}
