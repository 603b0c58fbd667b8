//! Suite orchestration and machine-readable reporting: the library side
//! of the command-line interface.

pub mod cellexpr;
pub mod presentation;

use crate::dbl::{DblUniverse, UniverseCaps};
use crate::error::{Error, Result};
use crate::lift::monoidal::FixtureFamily;
use crate::mondbl::Level;
use crate::report::{with_big_stack, Report, Status};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InstanceSel {
    Span { size: usize },
    Mat { size: usize },
    Square,
    File { path: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckName {
    Double,
    Monoidal,
    Companions,
    Theta,
    Lift,
    Alg,
    Fixtures,
}

impl std::str::FromStr for CheckName {
    type Err = Error;
    fn from_str(s: &str) -> Result<CheckName> {
        Ok(match s {
            "double" => CheckName::Double,
            "monoidal" => CheckName::Monoidal,
            "companions" => CheckName::Companions,
            "theta" => CheckName::Theta,
            "lift" => CheckName::Lift,
            "alg" => CheckName::Alg,
            "fixtures" => CheckName::Fixtures,
            other => return Err(Error::ConfigError(format!("unknown check name {other}"))),
        })
    }
}

/// Dependency order: structural checks before monoidal before lifting.
fn rank(c: CheckName) -> u8 {
    match c {
        CheckName::Double => 0,
        CheckName::Monoidal => 1,
        CheckName::Companions => 2,
        CheckName::Theta => 3,
        CheckName::Lift => 4,
        CheckName::Alg => 5,
        CheckName::Fixtures => 6,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub instance: InstanceSel,
    pub level: String,
    pub checks: Vec<CheckName>,
    pub fixtures: Vec<String>,
    pub format: OutFormat,
    /// Restrict every check family to one instantiation key (replay).
    pub filter: Option<String>,
}

impl SuiteConfig {
    pub fn level(&self) -> Result<Level> {
        self.level.parse()
    }
}

/// Execute the configured checks in dependency order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    let cfg = cfg.clone();
    with_big_stack(move || run_suite_inner(&cfg))
}

fn run_suite_inner(cfg: &SuiteConfig) -> Result<Report> {
    let level = cfg.level()?;
    let mut checks = cfg.checks.clone();
    if checks.is_empty() {
        return Err(Error::ConfigError("no checks requested".into()));
    }
    checks.sort_by_key(|c| rank(*c));
    checks.dedup();
    let filter = cfg.filter.as_deref();

    // load fixture files up front so parse errors surface before running
    let mut fixture_blocks = Vec::new();
    for path in &cfg.fixtures {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ConfigError(format!("cannot read {path}: {e}")))?;
        fixture_blocks.extend(cellexpr::parse_fixture_file(&text)?);
    }

    let mut report = Report::new();
    match &cfg.instance {
        InstanceSel::Span { size } => {
            for c in &checks {
                match c {
                    CheckName::Double => {
                        report.merge(crate::suites::span_double_suite(*size, filter))
                    }
                    CheckName::Monoidal => {
                        report.merge(crate::suites::span_monoidal_suite(*size, level, filter)?)
                    }
                    CheckName::Companions => {
                        report.merge(crate::suites::span_companion_suite(*size, filter))
                    }
                    CheckName::Theta => {
                        report.merge(crate::suites::span_theta_suite((*size).min(2), filter))
                    }
                    CheckName::Lift | CheckName::Fixtures => {
                        // run once when either is requested
                        if report.check("lift.families").is_some() {
                            continue;
                        }
                        let eqs = fixture_plan(&fixture_blocks, *c == CheckName::Fixtures)?;
                        let out =
                            crate::suites::span_lift_suite(*size, level, &eqs, filter)?;
                        report.merge(out.report);
                    }
                    CheckName::Alg => report.merge(crate::suites::span_alg_suite(*size, filter)),
                }
            }
        }
        InstanceSel::Mat { size } => {
            for c in &checks {
                match c {
                    CheckName::Double => {
                        report.merge(crate::suites::mat_double_suite(*size, filter))
                    }
                    CheckName::Monoidal => {
                        report.merge(crate::suites::mat_monoidal_suite(*size, level, filter)?)
                    }
                    CheckName::Companions => {
                        report.merge(crate::suites::mat_companion_suite(*size, filter))
                    }
                    CheckName::Lift => report.merge(crate::suites::mat_lift_suite(*size, level)?),
                    CheckName::Alg => {
                        let mat = crate::instances::mat::MatDbl::new(
                            crate::instances::mat::Quantale::booleans(),
                        )?;
                        let u = crate::instances::mat::mat_universe(
                            &mat,
                            *size,
                            UniverseCaps::default(),
                        );
                        report.merge(crate::instances::alg::check_local_coequalizers(
                            &mat, &u, filter,
                        ));
                    }
                    other => {
                        return Err(Error::ConfigError(format!(
                            "check {other:?} is not available for the mat instance"
                        )))
                    }
                }
            }
        }
        InstanceSel::Square => {
            for c in &checks {
                match c {
                    CheckName::Double => report.merge(crate::suites::squares_suite(filter)),
                    CheckName::Companions => {
                        let d = crate::instances::squares::square_double(
                            crate::finbase::FinCategory::z2(),
                        )?;
                        let arrows: Vec<usize> = vec![0, 1];
                        report.merge(crate::suites::table_companion_suite(
                            &d, &arrows, &arrows, filter,
                        ));
                    }
                    other => {
                        return Err(Error::ConfigError(format!(
                            "check {other:?} is not available for the square instance"
                        )))
                    }
                }
            }
        }
        InstanceSel::File { path } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::ConfigError(format!("cannot read {path}: {e}")))?;
            let pres = presentation::parse_presentation(&text)?;
            for c in &checks {
                match c {
                    CheckName::Double => {
                        let t = pres.clone().into_table()?;
                        let u = DblUniverse::derive(
                            &t,
                            t.objects.clone(),
                            t.all_tights(),
                            t.all_looses(),
                            t.all_squares(),
                            UniverseCaps::default(),
                        );
                        report.merge(crate::dbl::check_double_category(&t, &u, filter));
                    }
                    CheckName::Monoidal => {
                        let t = pres.clone().into_monoidal()?;
                        let u = DblUniverse::derive(
                            &t,
                            t.base.objects.clone(),
                            t.base.all_tights(),
                            t.base.all_looses(),
                            t.base.all_squares(),
                            UniverseCaps::default(),
                        );
                        report.merge(crate::mondbl::check_monoidal_double_category(
                            &t, &u, level, filter,
                        )?);
                    }
                    CheckName::Companions => {
                        let t = pres.clone().into_table()?;
                        report.merge(crate::suites::table_companion_suite(
                            &t,
                            &t.all_tights(),
                            &t.all_looses(),
                            filter,
                        ));
                    }
                    other => {
                        return Err(Error::ConfigError(format!(
                            "check {other:?} is not available for file instances"
                        )))
                    }
                }
            }
        }
    }
    Ok(report)
}

type FixturePlan = Vec<(
    FixtureFamily,
    Vec<Vec<crate::finbase::FinSet>>,
    Vec<crate::lift::monoidal::FixtureEq>,
)>;

fn fixture_plan(
    blocks: &[cellexpr::FixtureBlock],
    fixtures_requested: bool,
) -> Result<FixturePlan> {
    if !fixtures_requested && blocks.is_empty() {
        return Ok(vec![]);
    }
    if blocks.is_empty() {
        // bundled defaults: the reroute and unit-padding equations at the
        // canonical tuples
        let zero = crate::finbase::FinSet::from_atoms(&["0"]).unwrap();
        let two = crate::finbase::FinSet::from_atoms(&["0", "1"]).unwrap();
        let mut plan: FixturePlan = Vec::new();
        plan.push((
            FixtureFamily::Pent,
            vec![vec![zero.clone(), zero.clone(), two.clone(), two.clone()]],
            crate::suites::default_fixture_eqs(FixtureFamily::Pent),
        ));
        for fam in [
            FixtureFamily::Mu,
            FixtureFamily::Lam,
            FixtureFamily::Rho,
            FixtureFamily::Syl,
        ] {
            plan.push((
                fam,
                vec![vec![zero.clone(), two.clone()]],
                crate::suites::default_fixture_eqs(fam),
            ));
        }
        plan.push((
            FixtureFamily::HexR,
            vec![vec![zero.clone(), zero.clone(), two.clone()]],
            crate::suites::default_fixture_eqs(FixtureFamily::HexR),
        ));
        return Ok(plan);
    }
    let mut plan: FixturePlan = Vec::new();
    for b in blocks {
        if b.objects.is_empty() {
            return Err(Error::ConfigError(format!(
                "fixture {} declares no object tuple",
                b.label
            )));
        }
        let eqs = if b.eqs.is_empty() {
            crate::suites::default_fixture_eqs(b.family)
        } else {
            b.eqs
                .iter()
                .map(|e| crate::lift::monoidal::FixtureEq {
                    name: e.name.clone(),
                    lhs: e.lhs.clone(),
                    rhs: e.rhs.clone(),
                })
                .collect()
        };
        plan.push((b.family, vec![b.objects.clone()], eqs));
    }
    Ok(plan)
}

/// The stable JSON schema for reports.
#[derive(Serialize)]
struct JsonReport<'a> {
    version: &'static str,
    config: &'a SuiteConfig,
    checks: Vec<JsonCheck<'a>>,
    #[serde(rename = "wallMillis")]
    wall_millis: u128,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    status: &'static str,
    instances: u64,
    failures: u64,
    witnesses: &'a [crate::report::Witness],
}

/// Render a report in the requested format; the JSON form is stable and
/// byte-identical for identical configs apart from `wallMillis`.
pub fn emit_report(r: &Report, cfg: &SuiteConfig, wall_millis: u128) -> String {
    match cfg.format {
        OutFormat::Text => {
            let mut out = format!(
                "instance: {:?}  level: {}  checks: {:?}\n",
                cfg.instance, cfg.level, cfg.checks
            );
            out.push_str(&r.render_text());
            out.push_str(if r.passed() { "overall: PASS\n" } else { "overall: FAIL\n" });
            out
        }
        OutFormat::Json => {
            let checks: Vec<JsonCheck> = r
                .checks
                .iter()
                .map(|c| JsonCheck {
                    name: &c.name,
                    status: match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                    },
                    instances: c.instances,
                    failures: c.failures,
                    witnesses: &c.witnesses,
                })
                .collect();
            let jr = JsonReport {
                version: env!("CARGO_PKG_VERSION"),
                config: cfg,
                checks,
                wall_millis: wall_millis,
            };
            serde_json::to_string_pretty(&jr).expect("report serialization")
        }
    }
}

/// Scripting exit codes: 0 pass, 1 axiom failure, 2 usage or config
/// error, 3 parse or semantic error.
pub fn exit_code(outcome: &Result<Report>) -> i32 {
    match outcome {
        Ok(r) if r.passed() => 0,
        Ok(_) => 1,
        Err(Error::ParseError { .. }) => 3,
        Err(Error::SemanticError(_)) => 3,
        Err(_) => 2,
    }
}

