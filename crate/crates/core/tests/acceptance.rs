//! Acceptance suite: one test per shipped guarantee, each printing a
//! single pass/fail line (visible with `--nocapture`). Every tolerance is
//! exact cell equality; every bound is pinned here.

use dblcheck_core::bicat::LooseBicat;
use dblcheck_core::cli::{
    emit_report, run_suite, CheckName, InstanceSel, OutFormat, SuiteConfig,
};
use dblcheck_core::companion::CompanionChoice;
use dblcheck_core::dbl::{check_double_category, Dbl, DblUniverse, UniverseCaps};
use dblcheck_core::error::Error;
use dblcheck_core::finbase::{FinCategory, FinSet};
use dblcheck_core::instances::lax::{lax_codomain, lax_functor};
use dblcheck_core::instances::mat::{mat_universe, MatDbl, Quantale};
use dblcheck_core::instances::monoid::CommMonoidDbl;
use dblcheck_core::instances::span::{span_universe, SpanDbl};
use dblcheck_core::instances::squares::{square_double, squares_universe};
use dblcheck_core::lift::monoidal::{
    check_lifted, family_fixture_env, lift_monoidal_seeded, verify_lifted, FixtureFamily,
    TupleCaps,
};
use dblcheck_core::lift::{
    choice_comparison_icon_report, mat_canonical_choice, span_canonical_choice,
    span_relabelled_choice, CatAsBicat, Choice, LiftHomBicat,
};
use dblcheck_core::mondbl::{check_monoidal_double_category, Level};
use dblcheck_core::mutate::{Mutated, ALL_MUTATIONS};
use dblcheck_core::report::with_big_stack;
use std::time::Instant;

fn verdict(criterion: &str, ok: bool, note: &str) {
    println!(
        "[{}] criterion {criterion}: {note}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {note}");
}

#[test]
fn criterion_1_double_category_axiom_suite() {
    let started = Instant::now();
    let d = SpanDbl;
    let u = span_universe(&d, 3, UniverseCaps::default());
    let span_ok = check_double_category(&d, &u, None).passed();

    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let mu = mat_universe(&mat, 3, UniverseCaps::default());
    let mat_ok = check_double_category(&mat, &mu, None).passed();

    let sq = square_double(FinCategory::z2()).unwrap();
    let su = squares_universe(&sq, UniverseCaps::default());
    let sq_ok = check_double_category(&sq, &su, None).passed();

    let secs = started.elapsed().as_secs_f64();
    verdict(
        "1",
        span_ok && mat_ok && sq_ok && secs <= 180.0,
        &format!(
            "double-category axioms hold exactly on span(3), mat(bool,3), squares(Z/2) \
             in {secs:.1}s (three instances, target ≤ 60s each)"
        ),
    );
}

#[test]
fn criterion_2_companion_suite() {
    let r = dblcheck_core::suites::span_companion_suite(3, None);
    let exists = r.check("companions.exist").unwrap();
    let unique = r.check("companions.theta-unique").unwrap();
    verdict(
        "2",
        r.passed() && exists.instances > 0 && unique.instances > 0,
        &format!(
            "every function between size-≤3 sets has a companion ({} functions) and \
             enumeration certifies comparison-cell uniqueness ({} pairs)",
            exists.instances, unique.instances
        ),
    );
}

#[test]
fn criterion_3_theta_calculus_suite() {
    let r = dblcheck_core::suites::span_theta_suite(2, None);
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    let all_families = [
        "theta.groupoid",
        "theta.horizontal",
        "theta.unit",
        "theta.functor",
        "theta.functor-unit-constraint",
        "theta.adjunction",
        "theta.conjoint-of-inverse",
    ]
    .iter()
    .all(|n| names.contains(n));
    verdict(
        "3",
        r.passed() && all_families,
        "identity, vertical, horizontal, unit and functor laws of the comparison \
         calculus, the functor unit-constraint identity, and the adjunction \
         triangles all hold exactly at size ≤ 2",
    );
}

#[test]
fn criterion_4_monoidal_double_suite_with_mutations() {
    let span_ok = dblcheck_core::suites::span_monoidal_suite(2, Level::Symmetric, None)
        .unwrap()
        .passed();
    let mat_ok = dblcheck_core::suites::mat_monoidal_suite(2, Level::Symmetric, None)
        .unwrap()
        .passed();

    // every single-constraint corruption is caught, and its witness replays
    let d = SpanDbl;
    let base_u = span_universe(&d, 2, UniverseCaps::default());
    let mut mutations_ok = true;
    for target in ALL_MUTATIONS {
        let m = Mutated::new(&d, target);
        let u = DblUniverse::derive(
            &m,
            base_u.objects.clone(),
            base_u.tights.clone(),
            base_u.looses.clone(),
            base_u.squares.clone(),
            UniverseCaps::default(),
        );
        let report = check_monoidal_double_category(&m, &u, Level::Symmetric, None).unwrap();
        let witness = report
            .checks
            .iter()
            .find(|c| c.failures > 0)
            .and_then(|c| c.witnesses.first().map(|w| (c.name.clone(), w.key.clone())));
        match witness {
            None => {
                mutations_ok = false;
            }
            Some((family, key)) => {
                let replay =
                    check_monoidal_double_category(&m, &u, Level::Symmetric, Some(&key)).unwrap();
                let fam = replay.check(&family).unwrap();
                mutations_ok &= fam.failures == 1 && fam.instances == 1;
            }
        }
    }
    verdict(
        "4",
        span_ok && mat_ok && mutations_ok,
        "the eleven numbered interchange/unit diagrams and braiding self-inversion \
         pass on span(2) and mat(bool,2); each constraint corruption fails a named \
         diagram with a replayable witness",
    );
}

#[test]
fn criterion_5_lifting_suite() {
    let ok = with_big_stack(|| {
        let d = SpanDbl;
        let u = span_universe(&d, 2, UniverseCaps::default());
        let ch = span_canonical_choice();
        let zero = FinSet::from_atoms(&["0"]).unwrap();
        let two = FinSet::from_atoms(&["0", "1"]).unwrap();
        let tuple = vec![zero.clone(), zero, two.clone(), two];
        let (data, build) = lift_monoidal_seeded(
            &d,
            &ch,
            Level::Symmetric,
            &u,
            TupleCaps::default(),
            &[tuple.clone()],
        )
        .unwrap();
        let structural = check_lifted(&d, &ch, &data, &u).unwrap();
        // the shipped pentagonator fixture at the canonical tuple
        let env = family_fixture_env(&d, &ch, &data, FixtureFamily::Pent, &tuple).unwrap();
        let hb = LooseBicat(&d);
        let eqs = dblcheck_core::suites::default_fixture_eqs(FixtureFamily::Pent);
        let fixture = verify_lifted(&hb, &env, &eqs, None).unwrap();
        // inverses are stored and certified for every family component
        let inverses_ok = data.pent.values().chain(data.syl.values()).all(|c| {
            d.vcomp(&c.inv, &c.cell).ok() == Some(d.sq_id(&c.left.hat))
        });
        build.passed() && structural.passed() && fixture.passed() && inverses_ok
    });
    verdict(
        "5",
        ok,
        "span(2) lifts to monoidal bicategory data: tensor pseudofunctor, pseudo-mode \
         constraint transformations with adjoint equivalences, invertible coherence \
         families, and the pentagonator fixture at ({0},{0},{0,1},{0,1}) evaluates \
         equal on both sides",
    );
}

#[test]
fn criterion_6_functor_lifting() {
    let ok = with_big_stack(|| {
        let d = SpanDbl;
        let mat = MatDbl::new(Quantale::booleans()).unwrap();
        let u = span_universe(&d, 2, UniverseCaps::default());
        let ff = dblcheck_core::instances::functors::span_to_mat_monoidal(&mat);
        let functor_ok =
            dblcheck_core::mondbl::check_monoidal_double_functor(&d, &mat, &ff, &u, None)
                .passed();
        let ch = mat_canonical_choice(&mat);
        let lifted_ok = dblcheck_core::lift::monoidal::lift_monoidal_functor(
            &d,
            &mat,
            &ff,
            &ch,
            &u,
            TupleCaps::default(),
        )
        .map(|(_, r)| r.passed())
        .unwrap_or(false);

        let s = CommMonoidDbl::trivial();
        let e = lax_codomain();
        let su = s.universe();
        let lax = lax_functor(&s, &e);
        let empty: Choice<'_, dblcheck_core::instances::lax::TableMon> =
            Choice::from_map(CompanionChoice::new());
        let rejected = matches!(
            dblcheck_core::lift::monoidal::lift_monoidal_functor(
                &s,
                &e,
                &lax,
                &empty,
                &su,
                TupleCaps::default(),
            ),
            Err(Error::NotLooselyStrong(_))
        );
        functor_ok && lifted_ok && rejected
    });
    verdict(
        "6",
        ok,
        "the span-to-relations strong monoidal functor passes and lifts with verified \
         comparison data; the designed lax fixture is rejected as not loosely strong",
    );
}

#[test]
fn criterion_7_alg_oracle_equivalence() {
    let r = with_big_stack(|| dblcheck_core::suites::span_alg_suite(2, None));
    let oracle = r.check("alg.oracle").unwrap();
    let units = r.check("alg.unit-laws").unwrap();
    verdict(
        "7",
        r.passed() && oracle.instances >= 10 && units.instances > 0,
        &format!(
            "bimodule composition agrees with the independent quotient oracle via \
             constructed isomorphisms on {} fixture pairs, and unit laws hold through \
             constructed unitors",
            oracle.instances
        ),
    );
}

#[test]
fn criterion_8_choice_independence() {
    let ok = with_big_stack(|| {
        let d = SpanDbl;
        let u = span_universe(&d, 2, UniverseCaps::default());
        let pow3 = dblcheck_core::dbl::PowDbl::new(&d, 3);
        let u3 = dblcheck_core::lift::monoidal::pow_universe(&d, &u, 3, 6, 8);
        let cat = CatAsBicat(FinCategory {
            objects: vec!["src".into(), "tgt".into()],
            arrows: vec![("1s".into(), 0, 0), ("1t".into(), 1, 1), ("a".into(), 0, 1)],
            comp: [
                ((0usize, 0usize), 0usize),
                ((1, 1), 1),
                ((2, 0), 2),
                ((1, 2), 2),
            ]
            .into(),
            ids: vec![0, 1],
        });
        let src3 = dblcheck_core::lift::monoidal::assoc_src_fun(&d);
        let tgt3 = dblcheck_core::lift::monoidal::assoc_tgt_fun(&d);
        let hom = LiftHomBicat {
            s: &pow3,
            t: &d,
            funs: vec![&src3, &tgt3],
            dom_obs: u3.objects.clone(),
            dom_los: u3.looses.clone(),
        };
        let assoc = dblcheck_core::lift::monoidal::assoc_transf(&d);
        let gens = [(2usize, &assoc)].into();
        let ch1 = span_canonical_choice();
        let ch2 = span_relabelled_choice();
        let ones = vec![0usize, 1, 2];
        let bu = dblcheck_core::bicat::BUniverse::derive(
            &cat,
            vec![0, 1],
            ones.clone(),
            ones,
            UniverseCaps::default(),
        );
        choice_comparison_icon_report(&hom, &cat, &gens, &ch1, &ch2, &bu)
            .map(|r| r.passed())
            .unwrap_or(false)
    });
    verdict(
        "8",
        ok,
        "two distinct companion assignments for the span associator give lifts \
         related by an invertible icon of componentwise comparison cells, verified \
         by the icon checker",
    );
}

#[test]
fn criterion_9_cli_determinism_and_replay() {
    let cfg = SuiteConfig {
        instance: InstanceSel::Span { size: 2 },
        level: "symmetric".into(),
        checks: vec![CheckName::Double, CheckName::Companions],
        fixtures: vec![],
        format: OutFormat::Json,
        filter: None,
    };
    let j1 = emit_report(&run_suite(&cfg).unwrap(), &cfg, 0);
    let j2 = emit_report(&run_suite(&cfg).unwrap(), &cfg, 0);
    let deterministic = j1 == j2;

    // a failing file-backed run yields a witness whose replay reproduces
    // the verdict
    let bad_cfg = SuiteConfig {
        instance: InstanceSel::File {
            path: concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/../../fixtures/broken_assoc.dcat"
            )
            .into(),
        },
        level: "symmetric".into(),
        checks: vec![CheckName::Double],
        fixtures: vec![],
        format: OutFormat::Json,
        filter: None,
    };
    let report = run_suite(&bad_cfg).unwrap();
    let (family, key) = report
        .checks
        .iter()
        .find(|c| c.failures > 0)
        .and_then(|c| c.witnesses.first().map(|w| (c.name.clone(), w.key.clone())))
        .expect("corrupted table must produce a witness");
    let mut replay_cfg = bad_cfg.clone();
    replay_cfg.filter = Some(key);
    let replay = run_suite(&replay_cfg).unwrap();
    let fam = replay.check(&family).unwrap();
    let replays = fam.instances == 1 && fam.failures == 1;

    verdict(
        "9",
        deterministic && replays,
        "identical configs produce byte-identical json reports apart from timing, \
         and every failure witness replays to the same verdict",
    );
}
