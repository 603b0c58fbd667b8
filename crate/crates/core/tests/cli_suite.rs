//! Suite orchestration: determinism of reports, exit codes, and witness
//! replay.

use dblcheck_core::cli::{
    emit_report, exit_code, run_suite, CheckName, InstanceSel, OutFormat, SuiteConfig,
};
use dblcheck_core::error::Error;

fn span_cfg(checks: Vec<CheckName>) -> SuiteConfig {
    SuiteConfig {
        instance: InstanceSel::Span { size: 2 },
        level: "symmetric".into(),
        checks,
        fixtures: vec![],
        format: OutFormat::Json,
        filter: None,
    }
}

fn strip_wall(s: &str) -> String {
    s.lines()
        .filter(|l| !l.contains("wallMillis"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn identical_configs_give_identical_json() {
    let cfg = span_cfg(vec![CheckName::Double, CheckName::Companions]);
    let r1 = run_suite(&cfg).unwrap();
    let r2 = run_suite(&cfg).unwrap();
    let j1 = emit_report(&r1, &cfg, 1);
    let j2 = emit_report(&r2, &cfg, 2);
    assert_eq!(strip_wall(&j1), strip_wall(&j2));
    assert_ne!(j1, j2, "timing field must still be present");
}

#[test]
fn unknown_check_is_a_config_error() {
    assert!(matches!(
        "nonsense".parse::<CheckName>(),
        Err(Error::ConfigError(_))
    ));
    let out: Result<dblcheck_core::Report, Error> =
        Err(Error::ConfigError("x".into()));
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn corrupted_table_fails_and_witness_replays() {
    let cfg = SuiteConfig {
        instance: InstanceSel::File {
            path: concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/broken_assoc.dcat")
                .into(),
        },
        level: "symmetric".into(),
        checks: vec![CheckName::Double],
        fixtures: vec![],
        format: OutFormat::Json,
        filter: None,
    };
    let outcome = run_suite(&cfg);
    let report = outcome.unwrap();
    assert!(!report.passed());
    assert_eq!(exit_code(&Ok(report.clone())), 1);
    // pick any witness and replay it: same family must fail again on
    // exactly that instantiation
    let (family, witness) = report
        .checks
        .iter()
        .find_map(|c| c.witnesses.first().map(|w| (c.name.clone(), w.clone())))
        .expect("a witness");
    let mut replay_cfg = cfg.clone();
    replay_cfg.filter = Some(witness.key.clone());
    let replay = run_suite(&replay_cfg).unwrap();
    let fam = replay.check(&family).expect("family present");
    assert_eq!(fam.instances, 1, "filter restricts to the witness");
    assert_eq!(fam.failures, 1, "witness replays to the same verdict");
    assert_eq!(fam.witnesses[0].key, witness.key);
    assert_eq!(fam.witnesses[0].detail, witness.detail);
}

#[test]
fn parse_and_semantic_errors_exit_three() {
    for text in [
        "object A\n",                                       // missing header
        "dcat\nobject A\nloose v : A -> B\n",               // unknown boundary
    ] {
        let path = std::env::temp_dir().join(format!(
            "dblcheck-test-{}.dcat",
            sha_like(text)
        ));
        std::fs::write(&path, text).unwrap();
        let cfg = SuiteConfig {
            instance: InstanceSel::File {
                path: path.to_string_lossy().into_owned(),
            },
            level: "symmetric".into(),
            checks: vec![CheckName::Double],
            fixtures: vec![],
            format: OutFormat::Text,
            filter: None,
        };
        let outcome = run_suite(&cfg);
        assert_eq!(exit_code(&outcome), 3, "{text:?} gave {outcome:?}");
        std::fs::remove_file(&path).ok();
    }
}

fn sha_like(s: &str) -> usize {
    s.bytes().fold(7usize, |a, b| a.wrapping_mul(31).wrapping_add(b as usize))
}

#[test]
fn empty_check_list_is_rejected() {
    let cfg = span_cfg(vec![]);
    assert!(matches!(run_suite(&cfg), Err(Error::ConfigError(_))));
}

#[test]
fn square_instance_runs_double_and_companions() {
    let cfg = SuiteConfig {
        instance: InstanceSel::Square,
        level: "symmetric".into(),
        checks: vec![CheckName::Double, CheckName::Companions],
        fixtures: vec![],
        format: OutFormat::Text,
        filter: None,
    };
    let r = run_suite(&cfg).unwrap();
    assert!(r.passed(), "{}", r.render_text());
    // lift is not meaningful for the squares instance
    let mut bad = cfg;
    bad.checks = vec![CheckName::Lift];
    assert!(matches!(run_suite(&bad), Err(Error::ConfigError(_))));
}
