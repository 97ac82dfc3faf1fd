use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use counit_core::hopf::bilinear_relations;
use counit_core::{Alphabet, FieldMatrix, PresentedAlgebra, RatFunc};
use counit_resolve::cache::{self, cache_path};
use counit_resolve::config::{load_config, RunConfig};
use counit_resolve::error::{exit, CacheError, CliError};
use counit_resolve::report::{without_timings, Report};
use counit_resolve::{execute, Args};

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn args(cmd: &str, config: &Path, extra: &[&str]) -> Args {
    let mut v = vec!["counit-resolve", cmd, "--config", config.to_str().unwrap()];
    v.extend_from_slice(extra);
    Args::parse_from(v)
}

const SLQ2: &str = r#"{"field": "rational-functions-in-q", "E": [["0", "1"], ["-1/q", "0"]]}"#;

#[test]
fn loads_and_echoes_config() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "eq.json", SLQ2);
    let cfg = load_config(&p).unwrap();
    assert_eq!(cfg.e, vec![vec!["0", "1"], vec!["-1/q", "0"]]);
    assert_eq!(cfg.truncation_degree, 6);
    let again = RunConfig::from_json(&cfg.to_json()).unwrap().validate().unwrap();
    assert_eq!(again, cfg);
}

#[test]
fn canonicalizes_literals() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "c.json", r#"{"field": "rational-functions-in-q", "E": [["0", "2/2"], ["-(q)/(q^2)", "0"]]}"#);
    let cfg = load_config(&p).unwrap();
    assert_eq!(cfg.e, vec![vec!["0", "1"], vec!["-1/q", "0"]]);
}

#[test]
fn config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let singular = write(dir.path(), "s.json", r#"{"field": "rationals", "E": [["1", "0"], ["0", "0"]]}"#);
    assert!(matches!(load_config(&singular), Err(CliError::Core(counit_core::Error::SingularMatrix))));
    let small = write(dir.path(), "n.json", r#"{"field": "rationals", "E": [["1"]]}"#);
    assert!(matches!(load_config(&small), Err(CliError::Core(counit_core::Error::SizeTooSmall(1)))));
    let bad = write(dir.path(), "b.json", "{\"field\": \"rationals\",\n \"E\": [[\"1\", ");
    match load_config(&bad) {
        Err(CliError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
    let q_in_q = write(dir.path(), "q.json", r#"{"field": "rationals", "E": [["q", "0"], ["0", "1"]]}"#);
    assert!(matches!(load_config(&q_in_q), Err(CliError::Validation(_))));
    let unknown = write(dir.path(), "u.json", r#"{"field": "rationals", "E": [["1", "0"], ["0", "1"]], "colour": 1}"#);
    assert!(matches!(load_config(&unknown), Err(CliError::Parse { .. })));
    let missing = dir.path().join("absent.json");
    assert_eq!(load_config(&missing).unwrap_err().exit_code(), exit::INPUT);
}

#[test]
fn report_roundtrip() {
    let cfg = RunConfig::from_json(SLQ2).unwrap();
    let empty = Report::new(cfg);
    let text = empty.to_json();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["results"], serde_json::json!([]));
    let keys: Vec<&str> = ["version", "config", "results", "timings"].into();
    let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));

    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "eq.json", SLQ2);
    let out = execute(&args("homology", &p, &["--alpha", "Phi^2"]));
    assert_eq!(out.exit_code, exit::PASS);
    let json = out.json.unwrap();
    let mut parsed = Report::from_json(&json).unwrap();
    assert!(json.contains("\"closed-form\"") && json.contains("\"resolution\"") && json.contains("\"agree\": true"));
    parsed.timings.clear();
    assert_eq!(without_timings(&parsed.to_json()), without_timings(&json));
}

fn slq2_algebra(degree: usize) -> PresentedAlgebra<RatFunc> {
    let e = FieldMatrix::<RatFunc>::parse(&[vec!["0", "1"], vec!["-1/q", "0"]]).unwrap();
    PresentedAlgebra::complete(Alphabet::matrix("u", 2, 2), bilinear_relations(&e, &e).unwrap(), degree).unwrap()
}

#[test]
fn cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let alg = slq2_algebra(4);
    cache::save(dir.path(), &alg).unwrap();
    let back = cache::load::<RatFunc>(dir.path(), alg.alphabet(), alg.relations(), 4).unwrap().unwrap();
    assert_eq!(back.rules(), alg.rules());
    assert_eq!(back.filtration_dims(), alg.filtration_dims());
    assert_eq!(back.certified_degree(), alg.certified_degree());
    // A different D is a different key.
    assert!(cache::load::<RatFunc>(dir.path(), alg.alphabet(), alg.relations(), 5).unwrap().is_none());
}

#[test]
fn corrupt_and_stale_caches_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let alg = slq2_algebra(4);
    let path = cache::save(dir.path(), &alg).unwrap();
    assert_eq!(path, cache_path(dir.path(), alg.relations(), 4));
    let text = fs::read_to_string(&path).unwrap();

    fs::write(&path, text.replacen("\"degree\":4", "\"degree\":3", 1)).unwrap();
    let err = cache::load::<RatFunc>(dir.path(), alg.alphabet(), alg.relations(), 4).unwrap_err();
    assert!(matches!(err, CacheError::CorruptCache(_)));
    let mut warnings = Vec::new();
    let again = cache::complete_cached(Some(dir.path()), alg.alphabet().clone(), alg.relations().to_vec(), 4, &mut warnings).unwrap();
    assert_eq!(again.rules(), alg.rules());
    assert_eq!(warnings.len(), 1);
    // The recompute rewrote a good file.
    assert!(cache::load::<RatFunc>(dir.path(), alg.alphabet(), alg.relations(), 4).unwrap().is_some());

    fs::write(&path, text.replacen("counit-resolve-gb 1 ", "counit-resolve-gb 0 ", 1)).unwrap();
    let err = cache::load::<RatFunc>(dir.path(), alg.alphabet(), alg.relations(), 4).unwrap_err();
    assert!(matches!(err, CacheError::CacheVersionMismatch { .. }));
}

#[test]
fn cached_and_cold_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "eq.json", SLQ2);
    let cache_dir = dir.path().join("cache");
    let c = cache_dir.to_str().unwrap();
    let cold = execute(&args("gb", &p, &[]));
    let first = execute(&args("gb", &p, &["--cache-dir", c]));
    let warm = execute(&args("gb", &p, &["--cache-dir", c]));
    assert!(fs::read_dir(&cache_dir).unwrap().count() == 1);
    let strip = |o: &counit_resolve::Outcome| without_timings(o.json.as_ref().unwrap());
    assert_eq!(strip(&cold), strip(&first));
    assert_eq!(strip(&cold), strip(&warm));
    assert!(warm.warnings.is_empty());
}

#[test]
fn documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let eq = write(dir.path(), "eq.json", SLQ2);
    let i2 = write(dir.path(), "i2.json", r#"{"field": "rationals", "E": [["1", "0"], ["0", "1"]]}"#);
    assert_eq!(execute(&args("resolution", &eq, &["--check"])).exit_code, exit::PASS);
    let h = execute(&args("homology", &i2, &["--alpha", "I", "--beta", "I"]));
    assert_eq!(h.exit_code, exit::PASS);
    assert!(h.json.unwrap().contains("\"closed-form\": [\n          1,\n          1,\n          1,\n          1\n        ]"));
    let x = execute(&args("exactness", &eq, &["--position", "2", "--degree", "3", "--slack", "2"]));
    assert_eq!(x.exit_code, exit::PASS);
    assert!(x.text.contains("certified"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let i2 = write(dir.path(), "i2.json", r#"{"field": "rationals", "E": [["1", "0"], ["0", "1"]]}"#);
    assert_eq!(execute(&args("oracle", &i2, &["--degree", "2"])).exit_code, exit::INCONCLUSIVE);
    assert_eq!(execute(&args("oracle", &i2, &["--budget-mb", "0"])).exit_code, exit::BUDGET);
    assert_eq!(execute(&args("cogroupoid", &i2, &[])).exit_code, exit::INPUT);
    let i23 = write(
        dir.path(),
        "i23.json",
        r#"{"field": "rationals", "E": [["1", "0"], ["0", "1"]], "F": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}"#,
    );
    assert_eq!(execute(&args("transport", &i23, &[])).exit_code, exit::INPUT);
    let root = write(dir.path(), "r.json", r#"{"field": "rationals", "E": [["1", "1"], ["0", "1"]]}"#);
    assert_eq!(execute(&args("bialgebra-cohomology", &root, &[])).exit_code, exit::INPUT);
    assert_eq!(execute(&args("bialgebra-cohomology", &root, &["--assume-cosemisimple"])).exit_code, exit::PASS);
}
