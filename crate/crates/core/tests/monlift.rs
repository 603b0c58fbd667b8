//! Monoidal functor and transformation lifting, fixture evaluation, and
//! the comparison icon between companion choices.

use dblcheck_core::bicat::expr::{CellExpr, OneExpr};
use dblcheck_core::bicat::{buniverse_from_dbl, LooseBicat};
use dblcheck_core::companion::CompanionChoice;
use dblcheck_core::dbl::{DblTransf, DblUniverse, PowDbl, UniverseCaps};
use dblcheck_core::error::Error;
use dblcheck_core::finbase::{FinCategory, FinSet};
use dblcheck_core::instances::lax::{lax_codomain, lax_functor};
use dblcheck_core::instances::mat::{MatDbl, Quantale};
use dblcheck_core::instances::monoid::CommMonoidDbl;
use dblcheck_core::instances::span::{span_universe, SpanDbl};
use dblcheck_core::lift::monoidal::{
    family_fixture_env, lift_monoidal, lift_monoidal_functor, lift_monoidal_transformation,
    pow_universe, verify_lifted, FixtureEq, FixtureFamily, TupleCaps,
};
use dblcheck_core::lift::{
    choice_comparison_icon_report, mat_canonical_choice, span_canonical_choice,
    span_relabelled_choice, CatAsBicat, Choice, LiftHomBicat,
};
use dblcheck_core::mondbl::{
    check_monoidal_double_functor, check_monoidal_tight_transformation, identity_mon_fun,
    tensor_monoidal_functor, tensor_tau_monoidal_functor, Level, MonDbl,
};

#[test]
fn tensor_is_a_strong_monoidal_functor_via_middle_four() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let pow2 = PowDbl::new(&d, 2);
    let u2 = pow_universe(&d, &u, 2, 10, 16);
    let ff = tensor_monoidal_functor(&d);
    let r = check_monoidal_double_functor(&pow2, &d, &ff, &u2, None);
    assert!(r.passed(), "{}", r.render_text());
}

#[test]
fn braiding_comparison_is_a_monoidal_transformation() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let pow2 = PowDbl::new(&d, 2);
    let u2 = pow_universe(&d, &u, 2, 10, 16);
    let ff = tensor_monoidal_functor(&d);
    let gg = tensor_tau_monoidal_functor(&d);
    let braid = DblTransf {
        name: "braid".into(),
        at_ob: Box::new(|a: &Vec<FinSet>| SpanDbl.braid(&a[0], &a[1]).unwrap()),
        at_lo: Box::new(|m: &Vec<dblcheck_core::instances::span::Span>| {
            SpanDbl.braid_lo(&m[0], &m[1]).unwrap()
        }),
    };
    let r = check_monoidal_tight_transformation(&pow2, &d, &ff, &gg, &braid, &u2, None);
    assert!(r.passed(), "{}", r.render_text());

    // corrupted component: identity cells in place of the braiding cells
    let corrupted = DblTransf {
        name: "braid-bad".into(),
        at_ob: Box::new(|a: &Vec<FinSet>| SpanDbl.braid(&a[0], &a[1]).unwrap()),
        at_lo: Box::new(|m: &Vec<dblcheck_core::instances::span::Span>| {
            use dblcheck_core::dbl::Dbl;
            let d = SpanDbl;
            d.sq_id(&d.tensor_lo(&m[0], &m[1]))
        }),
    };
    let r = check_monoidal_tight_transformation(&pow2, &d, &ff, &gg, &corrupted, &u2, None);
    assert!(!r.passed());
}

#[test]
fn identity_monoidal_functor_lifts() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let ch = span_canonical_choice();
    let ff = identity_mon_fun(&d);
    let (data, rep) = lift_monoidal_functor(&d, &d, &ff, &ch, &u, TupleCaps::default()).unwrap();
    assert!(rep.passed(), "{}", rep.render_text());
    assert!(!data.omega.is_empty() && !data.gamma.is_empty() && !data.delta.is_empty());
}

#[test]
fn relation_functor_lifts_monoidally() {
    let d = SpanDbl;
    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let u = span_universe(&d, 2, UniverseCaps::default());
    let ch = mat_canonical_choice(&mat);
    let ff = dblcheck_core::instances::functors::span_to_mat_monoidal(&mat);
    let (data, rep) = lift_monoidal_functor(&d, &mat, &ff, &ch, &u, TupleCaps::default()).unwrap();
    assert!(rep.passed(), "{}", rep.render_text());
    assert!(!data.chi.is_empty());
}

#[test]
fn lax_fixture_is_rejected() {
    let s = CommMonoidDbl::trivial();
    let e = lax_codomain();
    let u = s.universe();
    let ff = lax_functor(&s, &e);
    let ch: Choice<'_, dblcheck_core::instances::lax::TableMon> =
        Choice::from_map(CompanionChoice::new());
    let r = lift_monoidal_functor(&s, &e, &ff, &ch, &u, TupleCaps::default());
    assert!(matches!(r, Err(Error::NotLooselyStrong(_))));
}

#[test]
fn identity_monoidal_transformation_lifts() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let ch = span_canonical_choice();
    let ff = identity_mon_fun(&d);
    let idt = DblTransf {
        name: "1".into(),
        at_ob: Box::new(|a: &FinSet| dblcheck_core::finbase::FinFun::identity(a)),
        at_lo: Box::new(|m: &dblcheck_core::instances::span::Span| {
            use dblcheck_core::dbl::Dbl;
            SpanDbl.sq_id(m)
        }),
    };
    let (data, rep) =
        lift_monoidal_transformation(&d, &d, &ff, &ff, &idt, &ch, &u, TupleCaps::default())
            .unwrap();
    assert!(rep.passed(), "{}", rep.render_text());
    assert!(!data.pi.is_empty());
}

#[test]
fn braiding_comparison_lifts_monoidally() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let u_small = DblUniverse::derive(
        &PowDbl::new(&d, 2),
        dblcheck_core::lift::monoidal::object_tuples(&u, 2, 9),
        vec![],
        vec![],
        vec![],
        UniverseCaps::default(),
    );
    let ch = span_canonical_choice();
    let ff = tensor_monoidal_functor(&d);
    let gg = tensor_tau_monoidal_functor(&d);
    let pow2 = PowDbl::new(&d, 2);
    let braid = DblTransf {
        name: "braid".into(),
        at_ob: Box::new(|a: &Vec<FinSet>| SpanDbl.braid(&a[0], &a[1]).unwrap()),
        at_lo: Box::new(|m: &Vec<dblcheck_core::instances::span::Span>| {
            SpanDbl.braid_lo(&m[0], &m[1]).unwrap()
        }),
    };
    let (data, rep) = lift_monoidal_transformation(
        &pow2,
        &d,
        &ff,
        &gg,
        &braid,
        &ch,
        &u_small,
        TupleCaps {
            pairs: 6,
            triples: 4,
            quads: 2,
        },
    )
    .unwrap();
    assert!(rep.passed(), "{}", rep.render_text());
    assert!(!data.pi.is_empty());
}

#[test]
fn pentagonator_fixture_evaluates_equal() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let ch = span_canonical_choice();
    let zero = FinSet::from_atoms(&["0"]).unwrap();
    let zo = FinSet::from_atoms(&["0", "1"]).unwrap();
    let tuple = vec![zero.clone(), zero, zo.clone(), zo];
    let (data, _) = dblcheck_core::lift::monoidal::lift_monoidal_seeded(
        &d,
        &ch,
        Level::Symmetric,
        &u,
        TupleCaps::default(),
        &[tuple.clone()],
    )
    .unwrap();
    assert!(data.pent.contains_key(&tuple), "tuple not in built range");
    let env = family_fixture_env(&d, &ch, &data, FixtureFamily::Pent, &tuple).unwrap();
    let hb = LooseBicat(&d);
    let eqs = vec![
        FixtureEq {
            name: "pent-reroute".into(),
            lhs: CellExpr::Named("pent".into()),
            rhs: CellExpr::V(
                Box::new(CellExpr::Named("theta_left_diag".into())),
                Box::new(CellExpr::Named("theta_diag_right".into())),
            ),
        },
        FixtureEq {
            name: "unit-padding".into(),
            lhs: CellExpr::Inv(Box::new(CellExpr::Runit(OneExpr::Name("left".into())))),
            rhs: CellExpr::Named("theta_runit".into()),
        },
    ];
    let r = verify_lifted(&hb, &env, &eqs, None).unwrap();
    assert!(r.passed(), "{}", r.render_text());

    // mismatched fixture pair: boundary error
    let bad = vec![FixtureEq {
        name: "bad".into(),
        lhs: CellExpr::Named("pent".into()),
        rhs: CellExpr::V(
            Box::new(CellExpr::Named("pent".into())),
            Box::new(CellExpr::Named("theta_left_diag".into())),
        ),
    }];
    assert!(matches!(
        verify_lifted(&hb, &env, &bad, None),
        Err(Error::BoundaryError { .. })
    ));
}

#[test]
fn unitor_and_braiding_fixtures_evaluate_equal() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let ch = span_canonical_choice();
    let (data, _) = lift_monoidal(&d, &ch, Level::Symmetric, &u, TupleCaps::default()).unwrap();
    let hb = LooseBicat(&d);
    let reroute = |name: &str| {
        vec![FixtureEq {
            name: format!("{name}-reroute"),
            lhs: CellExpr::Named(name.into()),
            rhs: CellExpr::V(
                Box::new(CellExpr::Named("theta_left_diag".into())),
                Box::new(CellExpr::Named("theta_diag_right".into())),
            ),
        }]
    };
    for (fam, name) in [
        (FixtureFamily::Mu, "mu"),
        (FixtureFamily::Lam, "lam"),
        (FixtureFamily::Rho, "rho"),
    ] {
        let tuple = data.mu.keys().next().unwrap().clone();
        let env = family_fixture_env(&d, &ch, &data, fam, &tuple).unwrap();
        let r = verify_lifted(&hb, &env, &reroute(name), None).unwrap();
        assert!(r.passed(), "{name}: {}", r.render_text());
    }
    for (fam, name) in [(FixtureFamily::HexR, "hex_r"), (FixtureFamily::HexS, "hex_s")] {
        let tuple = data.hex_r.keys().next().unwrap().clone();
        let env = family_fixture_env(&d, &ch, &data, fam, &tuple).unwrap();
        let r = verify_lifted(&hb, &env, &reroute(name), None).unwrap();
        assert!(r.passed(), "{name}: {}", r.render_text());
    }
    let tuple = data.syl.keys().next().unwrap().clone();
    let env = family_fixture_env(&d, &ch, &data, FixtureFamily::Syl, &tuple).unwrap();
    let r = verify_lifted(&hb, &env, &reroute("syl"), None).unwrap();
    assert!(r.passed(), "{}", r.render_text());
}

#[test]
fn choice_comparison_icon_passes_check_icon() {
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let pow3 = PowDbl::new(&d, 3);
    let u3 = pow_universe(&d, &u, 3, 6, 8);
    // a two-object category with a single non-identity arrow: the lifting
    // functors' domain, with the associator transformation on the arrow
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
    let bu = {
        let ones = vec![0usize, 1, 2];
        dblcheck_core::bicat::BUniverse::derive(
            &cat,
            vec![0, 1],
            ones.clone(),
            ones,
            UniverseCaps::default(),
        )
    };
    let r = choice_comparison_icon_report(&hom, &cat, &gens, &ch1, &ch2, &bu).unwrap();
    assert!(r.passed(), "{}", r.render_text());
}
