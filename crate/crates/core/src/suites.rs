//! Named check suites shared by the command-line runner and the
//! acceptance tests: companion search, the comparison-cell calculus, the
//! lifting pipeline, and the monoid/bimodule construction.

use crate::bicat::expr::{CellExpr, OneExpr};
use crate::bicat::LooseBicat;
use crate::companion::{
    adjunction_data, adjunction_triangles_hold, check_companion, check_conjoint, comp_iso_holds,
    compose_companions, conjoint_of_inverse, identity_companion, map_companion, search_companions,
    theta, CompanionPair,
};
use crate::dbl::{Dbl, DblFun, UniverseCaps};
use crate::error::Result;
use crate::finbase::{all_functions, compose_functions, FinFun, FinSet};
use crate::instances::mat::{mat_universe, MatDbl, Quantale};
use crate::instances::span::{span_objects, span_universe, Span, SpanCell, SpanDbl};
use crate::lift::monoidal::{
    check_lifted, family_fixture_env, lift_monoidal_seeded, verify_lifted, FixtureEq,
    FixtureFamily, MonoidalBicatData, TupleCaps,
};
use crate::lift::{mat_canonical_choice, span_canonical_choice, span_relabelled_choice};
use crate::mondbl::Level;
use crate::report::{Family, Report};

/// Candidate companion loose cells for a function: spans whose second leg
/// is forced by the first, with apexes up to the bound.
pub fn span_companion_candidates(f: &FinFun, apex_bound: usize) -> Vec<Span> {
    let mut out = Vec::new();
    for k in 0..=apex_bound {
        let labels: Vec<String> = (0..k).map(|i| format!("e{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let apex = FinSet::from_atoms(&refs).unwrap();
        for left in all_functions(&apex, &f.dom) {
            let right = compose_functions(f, &left).unwrap();
            out.push(Span::new(left, right).unwrap());
        }
    }
    out
}

/// Companion suite over Span(FinSet): every function between universe
/// objects has at least one companion, and enumeration certifies that the
/// characterizing equation has a unique globular solution per pair.
pub fn span_companion_suite(size_bound: usize, filter: Option<&str>) -> Report {
    let d = SpanDbl;
    let objects = span_objects(size_bound);
    let mut report = Report::new();
    let mut exists = Family::with_filter("companions.exist", filter.map(|s| s.to_string()));
    let mut unique = Family::with_filter(
        "companions.theta-unique",
        filter.map(|s| s.to_string()),
    );
    for a in &objects {
        for b in &objects {
            for f in all_functions(a, b) {
                let key = format!("[{}]", d.show_ti(&f));
                let cands = span_companion_candidates(&f, size_bound.max(a.len()));
                let found = search_companions(&d, &f, &cands).unwrap();
                if exists.admits(&key) {
                    exists.record(&key, !found.is_empty(), || {
                        "no companion found within the apex bound".into()
                    });
                }
                // uniqueness of the comparison cell for sampled pairs
                for (i, p) in found.iter().take(3).enumerate() {
                    for (j, q) in found.iter().take(3).enumerate() {
                        let key = format!("[{}#{i}#{j}]", d.show_ti(&f));
                        if !unique.admits(&key) {
                            continue;
                        }
                        let ok = (|| -> Result<bool> {
                            let th = theta(&d, p, q)?;
                            let all = d.globular_between(&p.hat, &q.hat)?;
                            let sat: Vec<_> = all
                                .into_iter()
                                .filter(|c| comp_iso_holds(&d, p, q, c).unwrap_or(false))
                                .collect();
                            Ok(sat.len() == 1 && sat[0] == th)
                        })();
                        unique.record(&key, ok == Ok(true), || format!("{ok:?}"));
                    }
                }
            }
        }
    }
    report.checks.push(exists.finish());
    report.checks.push(unique.finish());
    report
}

/// The canonical companion of a function in Span, used across the suites.
pub fn span_graph_companion(f: &FinFun) -> CompanionPair<SpanDbl> {
    span_canonical_choice().get(f).expect("graph companion")
}

/// The canonical conjoint: the reversed graph span.
pub fn span_graph_conjoint(f: &FinFun) -> crate::companion::ConjointPair<SpanDbl> {
    let d = SpanDbl;
    let chk = Span::cograph(f);
    let eta = d
        .cells_over(&Span::unit(&f.dom), &chk, f, &FinFun::identity(&f.dom))
        .into_iter()
        .find(|c| c.map == FinFun::identity(&f.dom))
        .expect("conjoint unit");
    let eps = d
        .cells_over(&chk, &Span::unit(&f.cod), &FinFun::identity(&f.cod), f)
        .pop()
        .expect("conjoint counit");
    crate::companion::ConjointPair {
        f: f.clone(),
        chk,
        eta,
        eps,
    }
}

/// The comparison-cell calculus suite over Span at the given bound,
/// exercising the identity, vertical, horizontal and unit laws, the
/// functor laws under the tensor and the relation functor, the unit
/// constraint identity, and the companion/conjoint adjunction triangles.
pub fn span_theta_suite(size_bound: usize, filter: Option<&str>) -> Report {
    let d = SpanDbl;
    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let relation = crate::instances::functors::span_to_mat(&mat);
    let objects = span_objects(size_bound);
    let ch1 = span_canonical_choice();
    let ch2 = span_relabelled_choice();
    let mut report = Report::new();
    let mk = |name: &str| Family::with_filter(name, filter.map(|s| s.to_string()));

    let mut functions: Vec<FinFun> = Vec::new();
    for a in &objects {
        for b in &objects {
            functions.extend(all_functions(a, b));
        }
    }

    let mut fam = mk("theta.groupoid");
    for f in &functions {
        let key = format!("[{}]", d.show_ti(f));
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let p = ch1.get(f)?;
            let q = ch2.get(f)?;
            // identity law
            if theta(&d, &p, &p)? != d.sq_id(&p.hat) {
                return Ok(false);
            }
            // vertical composition through a third companion
            let lhs = theta(&d, &p, &q)?;
            let back = theta(&d, &q, &p)?;
            if d.vcomp(&back, &lhs)? != d.sq_id(&p.hat) {
                return Ok(false);
            }
            // three companions: p, q and the searched one when distinct
            let r = compose_companions(&d, &identity_companion(&d, &f.dom), &p)?;
            let direct = theta(&d, &p, &r)?;
            let through = d.vcomp(&theta(&d, &q, &r)?, &theta(&d, &p, &q)?)?;
            Ok(direct == through)
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    let mut fam = mk("theta.horizontal");
    for f in &functions {
        for g in &functions {
            if g.dom != f.cod {
                continue;
            }
            let key = format!("[{};{}]", d.show_ti(g), d.show_ti(f));
            if !fam.admits(&key) {
                continue;
            }
            let ok = (|| -> Result<bool> {
                let p = ch1.get(f)?;
                let p2 = ch2.get(f)?;
                let q = ch1.get(g)?;
                let q2 = ch2.get(g)?;
                let lhs = d.hcomp(&theta(&d, &q, &q2)?, &theta(&d, &p, &p2)?)?;
                let rhs = theta(
                    &d,
                    &compose_companions(&d, &p, &q)?,
                    &compose_companions(&d, &p2, &q2)?,
                )?;
                Ok(lhs == rhs)
            })();
            fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
        }
    }
    report.checks.push(fam.finish());

    let mut fam = mk("theta.unit");
    for f in &functions {
        let key = format!("[{}]", d.show_ti(f));
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let p = ch1.get(f)?;
            let right = compose_companions(&d, &identity_companion(&d, &f.dom), &p)?;
            let left = compose_companions(&d, &p, &identity_companion(&d, &f.cod))?;
            Ok(theta(&d, &p, &right)? == d.runit_inv(&p.hat)
                && theta(&d, &p, &left)? == d.lunit_inv(&p.hat))
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    let mut fam = mk("theta.functor");
    for f in &functions {
        let key = format!("relation[{}]", d.show_ti(f));
        if fam.admits(&key) {
            let ok = (|| -> Result<bool> {
                let p = ch1.get(f)?;
                let q = ch2.get(f)?;
                let th = theta(&d, &p, &q)?;
                let fp = map_companion(&mat, &relation, &d, &p);
                let fq = map_companion(&mat, &relation, &d, &q);
                if !check_companion(&mat, &fp)? || !check_companion(&mat, &fq)? {
                    return Ok(false);
                }
                Ok((relation.sq)(&th) == theta(&mat, &fp, &fq)?)
            })();
            fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
        }
        // under the tensor: pair f with an identity
        let key = format!("tensor[{}]", d.show_ti(f));
        if fam.admits(&key) {
            let ok = (|| -> Result<bool> {
                use crate::mondbl::MonDbl;
                let unit = crate::mondbl::MonDbl::unit_ob(&d);
                let p = ch1.get(f)?;
                let q = ch2.get(f)?;
                let idp = identity_companion(&d, &unit);
                let fp = crate::lift::monoidal::tensor_pair(&d, &p, &idp);
                let fq = crate::lift::monoidal::tensor_pair(&d, &q, &idp);
                if !check_companion(&d, &fp)? || !check_companion(&d, &fq)? {
                    return Ok(false);
                }
                let th = theta(&d, &p, &q)?;
                let mapped = d.tensor_sq(&th, &d.sq_id(&d.lo_unit(&unit)));
                Ok(mapped == theta(&d, &fp, &fq)?)
            })();
            fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
        }
    }
    report.checks.push(fam.finish());

    let mut fam = mk("theta.functor-unit-constraint");
    for a in objects.iter() {
        for (name, ok) in [
            ("relation", {
                let lhs = (relation.unit)(a);
                let p = identity_companion(&d, a);
                let fp = map_companion(&mat, &relation, &d, &p);
                theta(&mat, &identity_companion(&mat, a), &fp)
                    .map(|rhs| lhs == rhs)
            }),
            ("identity", {
                let idf: DblFun<'_, SpanDbl, SpanDbl> = crate::dbl::identity_fun(&d);
                let lhs = (idf.unit)(a);
                let p = identity_companion(&d, a);
                let fp = map_companion(&d, &idf, &d, &p);
                theta(&d, &identity_companion(&d, a), &fp).map(|rhs| lhs == rhs)
            }),
        ] {
            let key = format!("{name}[{}]", d.show_ob(a));
            if fam.admits(&key) {
                fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
            }
        }
    }
    report.checks.push(fam.finish());

    let mut fam = mk("theta.adjunction");
    for f in &functions {
        let key = format!("[{}]", d.show_ti(f));
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let p = span_graph_companion(f);
            let c = span_graph_conjoint(f);
            if !check_conjoint(&d, &c)? {
                return Ok(false);
            }
            let (unit, counit) = adjunction_data(&d, &p, &c)?;
            if !adjunction_triangles_hold(&d, &p.hat, &c.chk, &unit, &counit)? {
                return Ok(false);
            }
            let invertible = d.sq_invert(&unit).is_some() && d.sq_invert(&counit).is_some();
            Ok(invertible == f.is_bijection())
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    let mut fam = mk("theta.conjoint-of-inverse");
    for f in functions.iter().filter(|f| f.is_bijection()) {
        let key = format!("[{}]", d.show_ti(f));
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let p = span_graph_companion(f);
            let c = conjoint_of_inverse(&d, &p)?;
            check_conjoint(&d, &c)
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    report
}

/// The shipped fixture equations for one family (used when no fixture
/// file overrides them): the reroute through the directly chosen diagonal
/// companion, and the unit-padding comparison against the constraint leaf.
pub fn default_fixture_eqs(family: FixtureFamily) -> Vec<FixtureEq> {
    let name = match family {
        FixtureFamily::Pent => "pent",
        FixtureFamily::Mu => "mu",
        FixtureFamily::Lam => "lam",
        FixtureFamily::Rho => "rho",
        FixtureFamily::HexR => "hex_r",
        FixtureFamily::HexS => "hex_s",
        FixtureFamily::Syl => "syl",
    };
    vec![
        FixtureEq {
            name: format!("{name}-reroute"),
            lhs: CellExpr::Named(name.into()),
            rhs: CellExpr::V(
                Box::new(CellExpr::Named("theta_left_diag".into())),
                Box::new(CellExpr::Named("theta_diag_right".into())),
            ),
        },
        FixtureEq {
            name: format!("{name}-unit-padding"),
            lhs: CellExpr::Inv(Box::new(CellExpr::Runit(OneExpr::Name("left".into())))),
            rhs: CellExpr::Named("theta_runit".into()),
        },
    ]
}

/// The lifting suite on a monoidal instance: build the data, run the
/// structural checks, and evaluate the fixture equations at every built
/// tuple of each requested family.
pub struct LiftOutcome<D: crate::mondbl::MonDbl> {
    pub data: MonoidalBicatData<D>,
    pub report: Report,
}

pub fn span_lift_suite(
    size_bound: usize,
    level: Level,
    fixture_eqs: &[(FixtureFamily, Vec<D4>, Vec<FixtureEq>)],
    filter: Option<&str>,
) -> Result<LiftOutcome<SpanDbl>> {
    let d = SpanDbl;
    let u = span_universe(&d, size_bound, UniverseCaps::default());
    let ch = span_canonical_choice();
    // seed the canonical fixture tuple when representable
    let mut seeds: Vec<Vec<FinSet>> = Vec::new();
    for (_, tuples, _) in fixture_eqs {
        for t in tuples {
            seeds.push(t.clone());
        }
    }
    let (data, build_rep) =
        lift_monoidal_seeded(&d, &ch, level, &u, TupleCaps::default(), &seeds)?;
    let mut report = build_rep;
    report.merge(check_lifted(&d, &ch, &data, &u)?);
    let hb = LooseBicat(&d);
    for (family, tuples, eqs) in fixture_eqs {
        for tuple in tuples {
            let env = family_fixture_env(&d, &ch, &data, *family, tuple)?;
            let mut r = verify_lifted(&hb, &env, eqs, filter)?;
            for c in &mut r.checks {
                c.name = format!("{}@{:?}", c.name, tuple.iter().map(|s| s.to_string()).collect::<Vec<_>>());
            }
            report.merge(r);
        }
    }
    Ok(LiftOutcome { data, report })
}

/// Object tuples of spans, by element lists.
pub type D4 = Vec<FinSet>;

pub fn mat_lift_suite(size_bound: usize, level: Level) -> Result<Report> {
    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let u = mat_universe(&mat, size_bound, UniverseCaps::default());
    let ch = mat_canonical_choice(&mat);
    let (data, mut report) =
        crate::lift::monoidal::lift_monoidal(&mat, &ch, level, &u, TupleCaps::default())?;
    report.merge(check_lifted(&mat, &ch, &data, &u)?);
    Ok(report)
}

/// The monoid/bimodule suite over Span: local coequalizers, the double
/// category axioms of the construction, unit laws through constructed
/// unitors, and the oracle comparison on bundled fixture pairs.
pub fn span_alg_suite(size_bound: usize, filter: Option<&str>) -> Report {
    use crate::instances::alg::*;
    let d = SpanDbl;
    let u = span_universe(&d, size_bound.min(2), UniverseCaps::default());
    let mut report = check_local_coequalizers(&d, &u, filter);
    let alg = match alg_construction(&d, &u) {
        Ok(a) => a,
        Err(e) => {
            let mut fam = Family::new("alg.construction");
            fam.record("construct", false, || format!("{e}"));
            report.checks.push(fam.finish());
            return report;
        }
    };

    let d1 = discrete_category("d1", FinSet::from_atoms(&["0"]).unwrap());
    let d2 = discrete_category("d2", FinSet::from_atoms(&["0", "1"]).unwrap());
    let z2 = z2_category();
    let arrow = arrow_category();

    let mut fam = Family::with_filter("alg.oracle", filter.map(|s| s.to_string()));
    let mut pairs: Vec<(Bimodule<SpanDbl>, Bimodule<SpanDbl>)> = Vec::new();
    for mon in [&d1, &d2, &z2, &arrow] {
        let u_bim = alg.unit_bim(mon);
        pairs.push((u_bim.clone(), u_bim.clone()));
    }
    // discrete spans as bimodules
    let trivial_bim = |name: &str,
                       src: &Monoid<SpanDbl>,
                       tgt: &Monoid<SpanDbl>,
                       left: FinFun,
                       right: FinFun|
     -> Bimodule<SpanDbl> {
        use crate::finbase::El;
        let carrier = Span::new(left, right).unwrap();
        let ma = d.lo_comp(&carrier, &src.loose).unwrap();
        let lact = FinFun::from_map(ma.apex(), carrier.apex(), |e| match e {
            El::Pair(_, x) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .unwrap();
        let bm = d.lo_comp(&tgt.loose, &carrier).unwrap();
        let ract = FinFun::from_map(bm.apex(), carrier.apex(), |e| match e {
            El::Pair(x, _) => x.as_ref().clone(),
            _ => unreachable!(),
        })
        .unwrap();
        span_bimodule(name, src, tgt, carrier, lact, ract).unwrap()
    };
    let m = trivial_bim(
        "m",
        &d2,
        &d1,
        FinFun::new(
            FinSet::from_atoms(&["p", "q"]).unwrap(),
            d2.ob.clone(),
            vec![0, 1],
        )
        .unwrap(),
        FinFun::new(
            FinSet::from_atoms(&["p", "q"]).unwrap(),
            d1.ob.clone(),
            vec![0, 0],
        )
        .unwrap(),
    );
    let n = trivial_bim(
        "n",
        &d1,
        &d2,
        FinFun::new(
            FinSet::from_atoms(&["s", "t"]).unwrap(),
            d1.ob.clone(),
            vec![0, 0],
        )
        .unwrap(),
        FinFun::new(
            FinSet::from_atoms(&["s", "t"]).unwrap(),
            d2.ob.clone(),
            vec![0, 1],
        )
        .unwrap(),
    );
    pairs.push((m.clone(), n.clone()));
    pairs.push((n.clone(), m.clone()));
    pairs.push((m.clone(), alg.unit_bim(&d1)));
    pairs.push((alg.unit_bim(&d2), m.clone()));
    // the regular Z/2 bimodule composed both ways
    pairs.push((alg.unit_bim(&z2), alg.unit_bim(&z2)));
    pairs.push((alg.unit_bim(&arrow), alg.unit_bim(&arrow)));
    for (mm, nn) in &pairs {
        let key = format!("[{};{}]", mm.name, nn.name);
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let comp = alg.lo_comp(nn, mm)?;
            let oracle = profunctor_oracle(mm, nn)?;
            let cells = alg.cells_with_boundary(
                &comp,
                &oracle,
                &alg.id_hom(&mm.src),
                &alg.id_hom(&nn.tgt),
            )?;
            Ok(cells.iter().any(|c| alg.sq_invert(c).is_some()))
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    let mut fam = Family::with_filter("alg.unit-laws", filter.map(|s| s.to_string()));
    for mm in [&m, &n, &alg.unit_bim(&z2)] {
        let key = format!("[{}]", mm.name);
        if !fam.admits(&key) {
            continue;
        }
        let ok = (|| -> Result<bool> {
            let l = alg.lunit(mm);
            let li = alg.lunit_inv(mm);
            let r = alg.runit(mm);
            let ri = alg.runit_inv(mm);
            Ok(alg.vcomp(&l, &li)? == alg.sq_id(mm) && alg.vcomp(&r, &ri)? == alg.sq_id(mm))
        })();
        fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
    }
    report.checks.push(fam.finish());

    report
}

/// Square-instance suite: the strict double category of a finite category.
pub fn squares_suite(filter: Option<&str>) -> Report {
    use crate::finbase::FinCategory;
    use crate::instances::squares::{square_double, squares_universe};
    let d = square_double(FinCategory::z2()).expect("valid category");
    let u = squares_universe(&d, UniverseCaps::default());
    crate::dbl::check_double_category(&d, &u, filter)
}

/// Companion suite on a table instance: exhaustive search over its looses.
pub fn table_companion_suite<D: Dbl>(
    d: &D,
    tights: &[D::Ti],
    looses: &[D::Lo],
    filter: Option<&str>,
) -> Report {
    let mut report = Report::new();
    let mut fam = Family::with_filter("companions.search", filter.map(|s| s.to_string()));
    for f in tights {
        let key = format!("[{}]", d.show_ti(f));
        if !fam.admits(&key) {
            continue;
        }
        let found = search_companions(d, f, looses).unwrap_or_default();
        let verified = found
            .iter()
            .all(|p| check_companion(d, p).unwrap_or(false));
        fam.record(&key, verified, || "a found pair fails the equations".into());
    }
    report.checks.push(fam.finish());
    report
}

/// Mat-instance companion/adjunction inequalities.
pub fn mat_companion_suite(size_bound: usize, filter: Option<&str>) -> Report {
    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let objects = span_objects(size_bound);
    let mut report = Report::new();
    let mut fam = Family::with_filter("companions.mat", filter.map(|s| s.to_string()));
    let ch = mat_canonical_choice(&mat);
    for a in &objects {
        for b in &objects {
            for f in all_functions(a, b) {
                let key = format!("[{}]", mat.show_ti(&f));
                if !fam.admits(&key) {
                    continue;
                }
                let ok = (|| -> Result<bool> {
                    let p = ch.get(&f)?;
                    if !check_companion(&mat, &p)? {
                        return Ok(false);
                    }
                    // adjunction inequalities id ≤ f̌⊙f̂ and f̂⊙f̌ ≤ id
                    use crate::instances::mat::QMat;
                    let chk = QMat::co_characteristic(&mat.q, &f);
                    let unit_side = mat.lo_comp(&chk, &p.hat)?;
                    let counit_side = mat.lo_comp(&p.hat, &chk)?;
                    Ok(mat
                        .cell(&mat.lo_unit(a), &unit_side, &FinFun::identity(a), &FinFun::identity(a))
                        .is_ok()
                        && mat
                            .cell(
                                &counit_side,
                                &mat.lo_unit(b),
                                &FinFun::identity(b),
                                &FinFun::identity(b),
                            )
                            .is_ok())
                })();
                fam.record(&key, ok == Ok(true), || format!("{ok:?}"));
            }
        }
    }
    report.checks.push(fam.finish());
    report
}

/// A SpanCell-level sanity wrapper so suites can live without a universe.
pub fn span_double_suite(size_bound: usize, filter: Option<&str>) -> Report {
    let d = SpanDbl;
    let u = span_universe(&d, size_bound, UniverseCaps::default());
    crate::dbl::check_double_category(&d, &u, filter)
}

pub fn mat_double_suite(size_bound: usize, filter: Option<&str>) -> Report {
    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let u = mat_universe(&mat, size_bound, UniverseCaps::default());
    crate::dbl::check_double_category(&mat, &u, filter)
}

pub fn span_monoidal_suite(size_bound: usize, level: Level, filter: Option<&str>) -> Result<Report> {
    let d = SpanDbl;
    let u = span_universe(&d, size_bound, UniverseCaps::default());
    crate::mondbl::check_monoidal_double_category(&d, &u, level, filter)
}

pub fn mat_monoidal_suite(size_bound: usize, level: Level, filter: Option<&str>) -> Result<Report> {
    let mat = MatDbl::new(Quantale::booleans()).unwrap();
    let u = mat_universe(&mat, size_bound, UniverseCaps::default());
    crate::mondbl::check_monoidal_double_category(&mat, &u, level, filter)
}

/// The SpanCell type re-exported for suite callers.
pub type SpanSquare = SpanCell;
